"""Regenerate tests/golden/ from the current CLI (run after intentional output changes)."""
import contextlib
import io
from pathlib import Path

from loewy.cli import main

HERE = Path(__file__).parent
DOCS = HERE / "fixtures" / "docs"

CASES = {
    "series_chain4.json": ["series", str(DOCS / "chain4.lat")],
    "series_d12.json": ["series", str(DOCS / "d12.lat")],
    "props_n5.json": ["props", str(DOCS / "n5.lat")],
    "props_multi.json": ["props", str(DOCS / "multi.lat")],
    "procedural_germ_series.json": ["procedural", "germ_model", "--series", "--cap", "ω·2"],
    "procedural_omega_series.json": ["procedural", "omega_plus_one_chain", "--series"],
    "procedural_divisibility_desc.json": ["procedural", "divisibility", "--witness", "desc",
                                          "--start", "720720"],
    "instance_subgroups_2_4.lat": ["instance", "subgroups", "2", "4"],
}


def run(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()


def golden_text(argv):
    text = run(argv)[1]
    # fixture paths are machine-specific; keep goldens portable
    return text.replace(str(DOCS) + "/", "")


if __name__ == "__main__":
    for name, argv in CASES.items():
        (HERE / "golden" / name).write_text(golden_text(argv), encoding="utf-8")
        print("wrote", name)
