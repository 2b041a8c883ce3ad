"""
The command-line front end
==========================

Every subcommand is also callable in-process through ``main``; the
installed ``scramblekit`` script does the same thing.
"""

import tempfile
from pathlib import Path

from scramblekit.cli import main

work = Path(tempfile.mkdtemp())
prism = work / "y42.txt"
scramble = work / "fig2.txt"
wheel = work / "wheel.txt"
divisor = work / "d.txt"

main(["gen", "prism", "4", "2", "--out", str(prism)])
print(prism.read_text())

code = main(["invariants", str(prism)])
print("exit code", code)

main(["gen", "fig2", "--out", str(wheel)])
scramble.write_text("egg 0 3\negg 1 4\negg 5 6\negg 2\n")
main(["order", str(wheel), str(scramble)])

divisor.write_text("d 7\nc 2 3\n")
main(["reduce", str(wheel), str(divisor), "0"])
main(["rank", str(wheel), str(divisor)])

print("exit code", main(["sweep", "grid", "2:3", "2:3"]))
print("exit code", main(["sn-exact", str(prism)]), "(over the default vertex cap)")
