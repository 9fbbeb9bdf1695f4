"""Loewy layers of baby Verma modules and projective covers for SL_{n+1}."""

from ._core import (
    Block,
    block_simple,
    dim_M,
    ext1_dim,
    ext1_g1,
    jantzen_decompose,
    rad1_Q,
    rad_layers_Q,
    rad_layers_Z,
    rad_layers_Z_g1,
    rad_layers_Zprime,
    report_json,
    soc_layers_Z,
    verify,
    verify_dim_identity,
    verma_support,
    weyl_dim,
)

__all__ = [
    "Block",
    "block_simple",
    "dim_M",
    "ext1_dim",
    "ext1_g1",
    "jantzen_decompose",
    "rad1_Q",
    "rad_layers_Q",
    "rad_layers_Z",
    "rad_layers_Z_g1",
    "rad_layers_Zprime",
    "report_json",
    "soc_layers_Z",
    "verify",
    "verify_dim_identity",
    "verma_support",
    "weyl_dim",
]
