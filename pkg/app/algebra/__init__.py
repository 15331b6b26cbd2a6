"""Exact algebra for invariant rings of cyclic actions on two variables."""
