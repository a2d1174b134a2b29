"""Verification library for the oscillator reduction of the quantum
Smorodinsky-Winternitz system: wavefunctions, spectra and the symmetry /
dynamical / potential / dynamical-potential algebras, checked by independent
numeric quadrature and exact symbolic algebra."""

__version__ = "0.1.0"
