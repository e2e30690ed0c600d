"""Physical constants, Gaussian-CGS units."""

C = 2.99792458e10        # speed of light, cm/s
HBAR = 1.054571817e-27   # reduced Planck constant, erg*s
