"""
MaxCut through quantum relaxation and rounding, on a built-in statevector simulator.
"""

__version__ = "0.1.0"
