"""Counting terms by code size.

count(m, n) is the number of terms whose code is n bits long and whose
free indices stay at or below m.  m = 0 means closed terms, m = inf
places no restriction.  The counts satisfy a two-variable recurrence
(a variable, an abstraction, or an application at the root) and the
unrestricted column solves a quadratic equation of generating
functions, which verify_functional_equation checks coefficient by
coefficient.
"""

import math

from blc import CountTable, count, count_row, verify_functional_equation

# The first twenty entries of the two headline columns.
print("n    closed      all")
closed = count_row(0, 19)
unrestricted = count_row(math.inf, 19)
for n in range(20):
    print("%-3d  %-9d   %d" % (n, closed[n], unrestricted[n]))
print()

# No term of size n can use an index deeper than n - 1, so the bound
# saturates: past m = n - 1 the count stops changing.
n = 9
row = [count(m, n) for m in range(12)]
print("count(m, 9) for m = 0..11:", row)
print("saturates at m = n - 1 =", n - 1, "with value", count(math.inf, n))
print()

# Counts grow roughly geometrically; the ratio of consecutive counts
# approaches 1/rho ~ 1.9634.
table = CountTable(320)
for n in (40, 80, 160, 320):
    ratio = table.count(math.inf, n) / table.count(math.inf, n - 1)
    print("count(inf, %3d) / count(inf, %3d) = %.8f" % (n, n - 1, ratio))
print()

# The independent series-arithmetic check of the whole table.
print("functional equation holds through n = 150:", verify_functional_equation(150))
