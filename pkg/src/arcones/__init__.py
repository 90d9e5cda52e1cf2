"""g-vector cones of Auslander-Reiten ice quivers and Lie multiplicities."""

__version__ = "0.1.0"
