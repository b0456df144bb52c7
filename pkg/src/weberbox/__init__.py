"""Series solutions, bathtub eigenstates and asymptotic checks for piecewise harmonic potentials."""

from .asymptotics import AsymptoticReport, PartialSumSpec, partial_sum_t, sandwich_check, series_s
from .bathtub import Eigenstate, assemble_wavefunction, eigenvalues, spectrum_sweep
from .potentials import CoulombPiecewise, PiecewisePotential
from .weber import SeriesPolicy, a_star, eval_decaying, weber_pair

__version__ = "0.1.0"
