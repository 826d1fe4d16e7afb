"""Scripted runs over affgrass: acceptance sweep and the d_2 experiment."""
