# Driving the command line tool from Python
#
# Every subcommand accepts a ring file or the name of a built-in ring.  With
# --json the output is a versioned report.

import json

from fthresh.cli import corpus_names, main

print("built-in rings:", ", ".join(corpus_names()))

# Plain text report for the F-pure threshold of a quadric.

main(["fpt", "quadric5", "--emax", "2"])

# The same thing as JSON.  main returns the exit code and prints the report.

code = main(["ainv", "twistedcubic", "--json"])
print("exit code", code)

# A ring file is a handful of key = value lines, then a gens: line followed
# by one generator per line.

text = """\
p = 3
vars = x y z
name = axes
gens:
x*y
x*z
y*z
"""
with open("axes.ring", "w") as fh:
    fh.write(text)
main(["verify", "axes.ring"])
