from .main import build_parser, main
from .experiment import expand_seeds, limiting_geometry, load_preset, PlaneGeometry

__all__ = ['build_parser', 'main', 'expand_seeds', 'limiting_geometry', 'load_preset', 'PlaneGeometry']
