"""Exact mod-p Aomoto-Betti numbers, multinets and Milnor fiber monodromy
for complex reflection arrangements."""

__version__ = "0.1.0"
