try:
    from ._core import (
        Circuit,
        amplitude,
        circuit_to_text,
        contract,
        parse_circuit,
        random_grid_circuit,
    )
except ImportError:  # running against an in-tree build of _core
    from _core import (
        Circuit,
        amplitude,
        circuit_to_text,
        contract,
        parse_circuit,
        random_grid_circuit,
    )

__all__ = [
    "Circuit",
    "amplitude",
    "circuit_to_text",
    "contract",
    "parse_circuit",
    "random_grid_circuit",
]
