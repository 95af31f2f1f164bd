import csv
import json
import logging
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np
from pydantic import BaseModel, ValidationError

from fusionframe.core.errors import StructuralError
from fusionframe.core.frames import FrameConfig, OperatorFrame, ScalarField
from fusionframe.flow.descent import DescentTrace, TraceRecord
from .schemas import FrameFile, Matrix

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

TRACE_COLUMNS = ("iter", "ffp", "grad_norm")

def encode_matrix(m: np.ndarray) -> Matrix:
    """행렬을 중첩 리스트로 (complex 성분은 [re, im])"""
    m = np.asarray(m)
    if np.iscomplexobj(m):
        return [[[float(x.real), float(x.imag)] for x in row] for row in m]
    return [[float(x) for x in row] for row in m]

def decode_matrix(rows: Matrix, field: ScalarField) -> np.ndarray:
    complex_entries = any(isinstance(x, (list, tuple)) for row in rows for x in row)
    if field is ScalarField.REAL:
        if complex_entries:
            raise StructuralError("real field frame file contains [re, im] entries")
        return np.array(rows, dtype=np.float64)
    try:
        values = [[complex(x[0], x[1]) if isinstance(x, (list, tuple)) else complex(x) for x in row] for row in rows]
    except IndexError:
        raise StructuralError("complex entries must be [re, im] pairs")
    return np.array(values, dtype=np.complex128)

def frame_to_model(frame: OperatorFrame) -> FrameFile:
    return FrameFile(
        field=frame.field,
        d=frame.d,
        ranks=list(frame.config.ranks),
        blocks=[encode_matrix(a) for a in frame.blocks],
    )

def frame_from_model(model: FrameFile) -> OperatorFrame:
    try:
        config = FrameConfig(field=model.field, d=model.d, ranks=tuple(model.ranks))
    except ValidationError as e:
        raise StructuralError(f"invalid frame parameters: {e}")
    blocks = []
    for i, rows in enumerate(model.blocks):
        a = decode_matrix(rows, model.field)
        if a.ndim != 2:
            raise StructuralError(f"block {i} is not a rectangular matrix")
        blocks.append(a)
    return OperatorFrame(config, tuple(blocks))

def write_frame(frame: OperatorFrame, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = frame_to_model(frame).model_dump(mode="json")
    path.write_text(json.dumps(payload, indent=2, allow_nan=False), encoding="utf-8")
    logger.debug(f"frame 저장: {path}")
    return path

def read_frame(path: PathLike) -> OperatorFrame:
    """frame JSON 파일 읽기; 형식 오류는 StructuralError"""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        model = FrameFile.model_validate(data)
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise StructuralError(f"cannot read frame file {path}: {e}")
    return frame_from_model(model)

def write_trace_csv(trace: Union[DescentTrace, Sequence[TraceRecord]], path: PathLike) -> Path:
    """iter,ffp,grad_norm 헤더의 CSV (17 유효숫자)"""
    records = trace.records if isinstance(trace, DescentTrace) else trace
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(TRACE_COLUMNS)
        for r in records:
            writer.writerow([r.iter, "{:.16e}".format(r.ffp), "{:.16e}".format(r.grad_norm)])
    return path

def read_trace_csv(path: PathLike) -> List[TraceRecord]:
    path = Path(path)
    try:
        with open(path, newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f)
            if tuple(reader.fieldnames or ()) != TRACE_COLUMNS:
                raise StructuralError(f"trace header must be {','.join(TRACE_COLUMNS)}, got {reader.fieldnames}")
            return [TraceRecord(int(row["iter"]), float(row["ffp"]), float(row["grad_norm"])) for row in reader]
    except (OSError, ValueError) as e:
        if isinstance(e, StructuralError):
            raise
        raise StructuralError(f"cannot read trace file {path}: {e}")

def write_json(model: BaseModel, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(model.model_dump_json(indent=2), encoding="utf-8")
    return path
