from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from fusionframe.flow.descent import DescentTrace

class FusionFrameError(Exception):
    """패키지 공통 예외"""

class StructuralError(FusionFrameError, ValueError):
    """shape, Hermitian 대칭, rank 조건 위반"""

class FrameValidationError(FusionFrameError, ValueError):
    """연산의 사전 조건 위반 (예: fusion frame 이 아닌 입력)"""

class DegenerateDrawError(FusionFrameError):
    """재추출 횟수를 넘어서도 퇴화된 Gaussian block 이 나온 경우"""

class StepTooLargeError(FusionFrameError):
    """retraction 입력 block 의 rank 가 부족함 - step 을 줄여야 함"""

class DivergenceError(FusionFrameError):
    """backtracking 이후에도 FFP 가 증가함"""

    def __init__(self, message: str, trace: Optional["DescentTrace"] = None):
        super().__init__(message)
        self.trace = trace

class ClusteringAmbiguityError(FusionFrameError):
    """최대 고유값 cluster 경계의 gap 이 허용 오차보다 작음"""

    def __init__(self, message: str, gap: float):
        super().__init__(message)
        self.gap = gap
