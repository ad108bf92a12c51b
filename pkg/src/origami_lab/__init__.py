"""Warped origami surfaces, their level graphs and discrete invariants."""

__version__ = "0.1.0"
