"""Hamiltonian edge unfoldings of the Platonic solids and their
perimeter-halving refoldings to convex polyhedra."""

__version__ = "0.1.0"
