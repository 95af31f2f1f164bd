"""
Desk-scale tightening experiment: two lines and a plane in R^3.

FFP cannot reach the Welch bound 16/3 there; descent settles at 11/2 on
frames where the two lines span a plane Q at a right dihedral angle to
the plane S, and the lines l1, l2 and Q ∩ S form a Mercedes-Benz frame
for Q.
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import yaml

from fusionframe.core.errors import StructuralError
from fusionframe.core.frames import OperatorFrame

logger = logging.getLogger(__name__)

DEFAULT_PRESET_PATH = Path(__file__).parent / "experiments.yaml"

_DEFAULT_PRESET: Dict[str, Any] = {
    'd': 3,
    'ranks': [1, 1, 2],
    'field': 'real',
    'target_ffp': 5.5,
    'target_tol': 1e-4,
    'angle_tol': 1e-3,
    'seeds': 100,
    'master_seed': 0,
    'step': 1e-2,
    'max_iters': 100_000,
    'grad_tol': 1e-10,
}

def load_preset(name: str = "two_lines_and_a_plane", config_path: Optional[str] = None) -> Dict[str, Any]:
    """실험 preset 로드 (파일이 없으면 기본값)"""
    config_path = str(DEFAULT_PRESET_PATH if config_path is None else config_path)
    preset = dict(_DEFAULT_PRESET)
    try:
        if os.path.exists(config_path):
            with open(config_path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
            preset.update(loaded.get('experiments', {}).get(name, {}))
        else:
            logger.warning(f"preset 파일 없음, 기본값 사용: {config_path}")
    except Exception as e:
        logger.error(f"preset 로드 오류: {e}")
    return preset

def expand_seeds(master_seed: int, count: int) -> List[int]:
    """SeedSequence(master).spawn(count) 의 각 자식 상태의 첫 32-bit word"""
    children = np.random.SeedSequence(master_seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint32)[0]) for child in children]

@dataclass(frozen=True)
class PlaneGeometry:
    dihedral_angle: float  # Q 와 S 사이, 기대값 pi/2
    pairwise_angles: tuple  # (l1,l2), (l1,m), (l2,m), 기대값 2pi/3
    angle_tol: float

    @property
    def right_dihedral(self) -> bool:
        return abs(self.dihedral_angle - np.pi / 2) <= self.angle_tol

    @property
    def mercedes_benz(self) -> bool:
        return all(abs(a - 2 * np.pi / 3) <= self.angle_tol for a in self.pairwise_angles)

    @property
    def ok(self) -> bool:
        return self.right_dihedral and self.mercedes_benz

def _unit(v: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(v)
    if norm == 0:
        raise StructuralError("degenerate direction in limiting geometry")
    return v / norm

def _angle(u: np.ndarray, v: np.ndarray) -> float:
    return float(np.arccos(np.clip(np.dot(u, v), -1.0, 1.0)))

def limiting_geometry(frame: OperatorFrame, angle_tol: float = 1e-3) -> PlaneGeometry:
    """
    Measure the minimizer geometry of a real (1, 1, 2) frame in R^3.

    The dihedral angle between Q = span(l1, l2) and S is read off their
    normals. The three lines are oriented so that l1 has a non-positive
    inner product with both others before the angles are measured.
    """
    if frame.d != 3 or tuple(frame.config.ranks) != (1, 1, 2) or np.iscomplexobj(frame.blocks[0]):
        raise StructuralError("limiting geometry is defined for real frames with d=3, ranks=(1, 1, 2)")
    l1 = _unit(frame.blocks[0][0])
    l2 = _unit(frame.blocks[1][0])
    plane = frame.blocks[2]

    n_q = _unit(np.cross(l1, l2))
    n_s = _unit(np.cross(plane[0], plane[1]))
    dihedral = float(np.arccos(np.clip(abs(np.dot(n_q, n_s)), 0.0, 1.0)))
    m = _unit(np.cross(n_q, n_s))

    u2 = -l2 if np.dot(l1, l2) > 0 else l2
    u3 = -m if np.dot(l1, m) > 0 else m
    angles = (_angle(l1, u2), _angle(l1, u3), _angle(u2, u3))
    return PlaneGeometry(dihedral, angles, angle_tol)
