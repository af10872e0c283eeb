"""Print circuit constants, facet offsets and the shift for every input in data/."""

import json
import sys
from math import pi
from pathlib import Path

from qsdisc import (
    WeightSystem,
    circuit_constant,
    compare_arrangements,
    hls_offset,
    is_quasi_symmetric,
)
from qsdisc.errors import InvalidInput

DATA = Path(__file__).resolve().parent.parent / "data"


def main(paths):
    for path in paths or sorted(DATA.glob("*.json")):
        doc = json.loads(Path(path).read_text())
        name = doc.get("name", Path(path).stem)
        try:
            ws = WeightSystem.from_weights(doc["weights"])
        except InvalidInput as exc:
            print(f"{name}: skipped ({exc})")
            continue
        if not is_quasi_symmetric(ws):
            print(f"{name}: not quasi-symmetric")
            continue
        rep = compare_arrangements(ws)
        z = ", ".join(f"{float(c) / (2 * pi):+.7f}" for c in rep.shift.coords)
        print(f"{name}: {rep.verdict}, z = ({z})")
        for m in rep.matches:
            print(
                f"    l={m.normal}  c={circuit_constant(ws, m.normal)}  c_F={hls_offset(ws, m.normal)}"
                f"  offset={m.discriminant}"
            )


if __name__ == "__main__":
    main(sys.argv[1:])
