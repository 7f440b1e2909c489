"""A tour of the command-line interface, run in a scratch directory.

Exit codes are part of the contract: 0 success, 1 usage or parse errors,
2 mathematical failures (axioms fail, not effective), 3 internal bugs.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

EX_A = """rank 2
action
z1 -> t1*z1
z2 -> t2*z2 + (t2 - t1^2)*z1^2
end
"""

BROKEN = """rank 1
action
z1 -> t1*z1 + 1
end
"""


def falin(*args, cwd):
    proc = subprocess.run([sys.executable, "-m", "falin.cli", *args],
                          capture_output=True, text=True, cwd=cwd)
    print(f"$ falin {' '.join(args)}   -> exit {proc.returncode}")
    for stream, text in (("stdout", proc.stdout), ("stderr", proc.stderr)):
        for line in text.rstrip().splitlines():
            print(f"    [{stream}] {line}")
    return proc


with tempfile.TemporaryDirectory() as scratch:
    scratch = Path(scratch)
    (scratch / "exA.act").write_text(EX_A)
    (scratch / "broken.act").write_text(BROKEN)

    falin("check", "exA.act", cwd=scratch)
    falin("linearize", "exA.act", cwd=scratch)
    falin("check", "broken.act", cwd=scratch)          # exit 2, witness shown
    falin("generate", "--rank", "2", "--seed", "42", "--elementary", "2",
          "--degree", "2", "--weight-bound", "3", cwd=scratch)
    falin("linearize", "action_r2_s42.act", cwd=scratch)
    falin("abelianize", "action_r2_s42.alpha.map", cwd=scratch)
