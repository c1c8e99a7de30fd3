"""Exact plethysm coefficients, tensor-power multiplicities and their quasi-polynomial asymptotics."""
