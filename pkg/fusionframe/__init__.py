"""
Fusion frame tightening and certification toolkit
"""

__version__ = "1.0.0"
__author__ = "fusionframe developers"
