"""cybelab: exact verification workbench for loop-algebra Yang-Baxter
structures — rational kernels, completed formal series, residue pairings,
and the associated splitting operator, over exact rational arithmetic."""

__version__ = "0.1.0"
