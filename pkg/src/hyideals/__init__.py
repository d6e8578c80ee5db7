"""hyideals: H_Y-ideals over Zariski spectra of finite commutative rings."""

__version__ = "0.1.0"
