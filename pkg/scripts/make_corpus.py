"""Regenerate the .tpc example corpus from the diagram builders."""

import json
import pathlib
from fractions import Fraction

from tpcalc import diagram as dg
from tpcalc.textio import render_program

OUT = pathlib.Path(__file__).resolve().parent.parent / "corpus"

U_OP = [[1, 2], [0, 1]]
V_OP = [[0, 1], [1, 3]]


def programs():
    third, two_thirds = Fraction(1, 3), Fraction(2, 3)
    u, v = dg.matrix_on_bit(U_OP), dg.matrix_on_bit(V_OP)
    yield "value_bot", dg.value_bot(), None
    yield "value_false", dg.value_false(), None
    yield "value_true", dg.value_true(), None
    yield "value_top", dg.value_top(), None
    yield "or_strict", dg.or_strict(), None
    yield "or_lazy", dg.or_lazy(), None
    yield "or_parallel", dg.or_parallel(), None
    yield "strict_or_bottom", dg.strict_or_with_bottom(), None
    yield "strict_or_bottom_rewritten", dg.strict_or_with_bottom_rewritten(), None
    yield "lazy_or_true", dg.lazy_or_with_true(), None
    yield "lazy_or_true_rewritten", dg.lazy_or_with_true_rewritten(), None
    yield "coin", dg.proba_coin_matrix(), "qnn"
    yield "proba_coin", dg.pbit(third, two_thirds) >> dg.proba_coin_matrix(), "qnn"
    yield "hadamard", dg.hadamard(), "qr2"
    yield "hadamard_plus", dg.plus_state() >> dg.hadamard(), "qr2"
    yield "switch_dup", dg.switch_dup(u, v), "q"
    yield "switch_single", dg.switch_single(u, v), "q"
    yield "switch_higher_order_plugged", dg.plug_operations(dg.switch_higher_order(), u, v), "q"
    yield "bit_identity", dg.Id(dg.BIT), None
    yield "disjunction", dg.disjunction([dg.ONE, dg.ONE]), None


def main() -> None:
    OUT.mkdir(exist_ok=True)
    for name, d, tag in programs():
        (OUT / f"{name}.tpc").write_text(render_program(d, tag), encoding="utf-8")
    ident = {"semiring": "q", "rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}
    (OUT / "identity_2x2.json").write_text(json.dumps(ident) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
