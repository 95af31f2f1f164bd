from .majorization import MajorizationQuery, majorizes, query_majorizes
from .tff import (
    TFFVerdict, TFFCheck, DimensionCountObstruction, equal_rank_tff_exists, dimension_count_obstruction,
    tff_necessary_check
)
from .realize import RealizedFrame, realize_classical_spectrum

__all__ = [
    'MajorizationQuery', 'majorizes', 'query_majorizes',
    'TFFVerdict', 'TFFCheck', 'DimensionCountObstruction', 'equal_rank_tff_exists',
    'dimension_count_obstruction', 'tff_necessary_check',
    'RealizedFrame', 'realize_classical_spectrum'
]
