#!/usr/bin/env python3
"""Golden-file tests for the CLI: pinned output bytes, exit codes, config
handling. Usage: cli_golden.py /path/to/moranrep"""

import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1]
failures = []


def run(args, config=None):
    cmd = [BIN] + args
    proc = subprocess.run(cmd, capture_output=True, text=True)
    return proc


def check(name, args, expect_stdout=None, expect_prefixes=None, expect_exit=0):
    proc = run(args)
    ok = proc.returncode == expect_exit
    if ok and expect_stdout is not None:
        ok = proc.stdout == expect_stdout
    if ok and expect_prefixes is not None:
        lines = proc.stdout.splitlines()
        if len(lines) < len(expect_prefixes):
            ok = False
        else:
            ok = all(line.startswith(pre) for line, pre in zip(lines, expect_prefixes))
    status = "ok" if ok else "FAIL"
    print(f"{status:4} {name}")
    if not ok:
        failures.append(name)
        print(f"     args: {args}")
        print(f"     exit: {proc.returncode} (expected {expect_exit})")
        print(f"     stdout: {proc.stdout!r}")
        print(f"     stderr: {proc.stderr!r}")


# Exact rational outputs.
check("eval-f exact", ["eval-f", "--p", "1/2,1/4,1/4", "--x", "1/3"], "1/2\n")
check("eval-f identity", ["eval-f", "--s", "3", "--x", "7/9"], "7/9\n")
check("eval-f boundary", ["eval-f", "--p", "1/2,1/4,1/4", "--x", "1"], "1/1\n")
check("eval-f truncated", ["eval-f", "--s", "3", "--x", "22/63", "--depth", "5"],
      "28/81\ntail_bound = 1/243\n")
check("invert-f", ["invert-f", "--p", "1/2,1/4,1/4", "--y", "1/2", "--depth", "3"],
      "1 0 0\n")
check("invert-f uniform", ["invert-f", "--s", "3", "--y", "7/9", "--depth", "2"], "2 1\n")
check("encode", ["encode", "--s", "3", "--x", "11/27", "--depth", "4"],
      "1 0 2 0\nexact = true\n")
check("decode sadic", ["decode", "--seq", "1(0)", "--base", "3"], "1/3\n")
check("decode negasadic", ["decode", "--seq", "(1)", "--rep", "negasadic", "--base", "3"],
      "-1/4\n")
check("decode p", ["decode", "--seq", "(12)", "--rep", "p", "--p", "1/2,1/4,1/4"],
      "11/15\n")
check("measure", ["measure", "--s", "3", "--u", "0", "--p", "1/3,1/3,1/3", "--level", "2"],
      "4/81\n")
check("cyl", ["cyl", "--p", "1/2,1/4,1/4", "--base", "1"],
      "lo,hi,length\n1/2,3/4,1/4\n")
check("rcyl rank0", ["rcyl", "--s", "4", "--u", "2", "--base", ""],
      "lo,hi,length\n1/3,43/63,22/63\n")
check("rcyl base1", ["rcyl", "--p", "1/2,1/4,1/4", "--u", "0", "--base", "1"],
      "lo,hi,length\n17/28,2/3,5/84\n")
check("bounds combo", ["bounds", "--p", "1/2,1/4,1/4", "--combos", "0,2"],
      "lo,hi,diameter\n0/1,1/1,1/1\n")
check("gaps", ["gaps", "--s", "4", "--u", "0"],
      "p,relation,gap\n1,descending,13/112\n2,descending,17/224\n")
check("gaps one p", ["gaps", "--s", "6", "--u", "3", "--pdigit", "1"],
      "p,relation,gap\n1,ascending,13721/46620\n")
check("cover su", ["cover", "--s", "3", "--u", "0", "--level", "2"],
      "base_word,lo,hi,length\n"
      "1 1,17/36,1/2,1/36\n"
      "1 2,5/12,23/54,1/108\n"
      "2 1,29/108,5/18,1/108\n"
      "2 2,1/4,41/162,1/324\n")
check("cover combo", ["cover", "--s", "3", "--combos", "0,2", "--level", "1"],
      "base_word,lo,hi,length\n0,0/1,1/3,1/3\n2,2/3,1/1,1/3\n")
check("cover parallel matches", ["cover", "--s", "3", "--u", "0", "--level", "2",
                                 "--parallel"],
      run(["cover", "--s", "3", "--u", "0", "--level", "2"]).stdout)
check("member su", ["member", "--p", "1/2,1/4,1/4", "--u", "0", "--x", "2/3",
                    "--level", "3"], "true\n")
check("member combo", ["member", "--s", "3", "--combos", "0,2", "--x", "1/3",
                       "--level", "4"], "true\n")
check("member outside", ["member", "--s", "3", "--combos", "0,2", "--x", "1/2",
                         "--level", "1"], "false\n")
check("sample", ["sample", "--p", "1/2,1/4,1/4", "--depth", "8", "--n", "4",
                 "--seed", "11"],
      "index,value,value_float\n"
      "0,68/6561,0.0103642737387593\n"
      "1,650/729,0.891632373113855\n"
      "2,155/6561,0.0236244474927602\n"
      "3,236/243,0.97119341563786\n")

# Solver outputs: pin the stable leading digits.
check("dim su", ["dim", "su", "--s", "3", "--u", "0", "--p", "1/3,1/3,1/3"],
      expect_prefixes=["alpha0 = 0.4380178794", "residual = ", "iterations = ",
                       "degenerate = false"])
check("dim thm1", ["dim", "thm1", "--s", "4", "--u", "3"],
      expect_prefixes=["alpha0 = 0.3471209568"])
check("dim thm2", ["dim", "thm2", "--s", "3", "--counts", "1:2"],
      expect_prefixes=["alpha0 = 0.6309297535"])
check("dim combo", ["dim", "combo", "--p", "2/5,1/5,2/5", "--combos", "0,2"],
      expect_prefixes=["alpha0 = 0.7564707973"])
check("dim moran", ["dim", "moran", "--ratios", "1/3,1/9"],
      expect_prefixes=["alpha0 = 0.4380178794"])
check("dim degenerate", ["dim", "su", "--s", "3", "--u", "2", "--p", "1/3,1/3,1/3"],
      expect_prefixes=["alpha0 = 0", "residual = 0", "iterations = 0",
                       "degenerate = true"])
check("cover-sum at root", ["cover-sum", "--s", "3", "--u", "0", "--level", "3",
                            "--alpha", "0.4380178794859424"],
      expect_prefixes=["1"])
check("cover-sum scan", ["cover-sum", "--s", "3", "--u", "0", "--level", "2",
                         "--scan", "0.3:0.5:3"],
      expect_prefixes=["alpha,cover_sum", "0.3,1.5289444945", "0.4,1.1228319737",
                       "0.5,0.8293446239"])
check("boxdim", ["boxdim", "--s", "3", "--combos", "0,2", "--level", "8"],
      expect_prefixes=["0.6"])
check("ks", ["ks", "--s", "3", "--n", "2000", "--depth", "20", "--seed", "3"],
      expect_prefixes=["ks_distance = 0.028772", "critical_value = 0.0304105"])

# Exit codes: 2 for validation, 3 for the enumeration cap.
check("bad law", ["eval-f", "--p", "1/2,1/4", "--x", "1/3"], expect_exit=2)
check("bad rational", ["eval-f", "--s", "3", "--x", "zebra"], expect_exit=2)
check("missing flag", ["eval-f", "--s", "3"], expect_exit=2)
check("unknown flag", ["eval-f", "--s", "3", "--x", "1/2", "--zzz", "1"], expect_exit=2)
check("cap exceeded", ["cover", "--s", "3", "--u", "0", "--level", "40"], expect_exit=3)
check("cap exceeded custom", ["cover", "--s", "3", "--u", "0", "--level", "3",
                              "--cap", "2"], expect_exit=3)
check("prefix conflict", ["dim", "combo", "--s", "3", "--combos", "0,01"],
      expect_exit=2)

# Config file: flags override, shared keys are filtered per subcommand.
with tempfile.TemporaryDirectory() as tmp:
    cfg = os.path.join(tmp, "law.cfg")
    with open(cfg, "w") as fh:
        fh.write("# shared law\ns = 3\np = 1/2,1/4,1/4\nu = 0\nlevel = 2\n")
    check("config basic", ["eval-f", "--config", cfg, "--x", "1/3"], "1/2\n")
    check("config override", ["eval-f", "--config", cfg, "--x", "1/3",
                              "--p", "1/3,1/3,1/3"], "1/3\n")
    check("config multi-key", ["measure", "--config", cfg],
          "1/4\n" if False else run(["measure", "--p", "1/2,1/4,1/4", "--u", "0",
                                     "--level", "2"]).stdout)

    out_path = os.path.join(tmp, "cover.csv")
    proc = run(["cover", "--s", "3", "--combos", "0,2", "--level", "1",
                "--out", out_path])
    with open(out_path) as fh:
        content = fh.read()
    ok = (proc.returncode == 0 and
          content == "base_word,lo,hi,length\n0,0/1,1/3,1/3\n2,2/3,1/1,1/3\n")
    print(("ok  " if ok else "FAIL") + " --out file")
    if not ok:
        failures.append("--out file")

if failures:
    print(f"\n{len(failures)} golden test(s) failed: {failures}")
    sys.exit(1)
print("\nall golden tests passed")
