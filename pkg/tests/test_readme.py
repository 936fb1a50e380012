# # Weavekh
# 
# Python package to compute the Jones polynomials and the Khovanov ranks of the weaving knots W(3, n), and to study how their Betti numbers approach a normal distribution.
# 
# The Jones polynomial of W(3, n) is obtained from a four-term recursion on the coefficients of the n-th power of the braid s1 s2^-1 in the Hecke algebra of the braid group on three strands, so no state sum over the 2^(2n) states of the diagram is needed. Since weaving knots are alternating, their Khovanov ranks follow from the Jones polynomial and the signature, and every computation stays in exact integer arithmetic, whatever the size of n.
# 
# ## How do I install this package?
# 
# As usual, just download it using pip:
# 
# ```shell
# pip install weavekh

# 
# ## Documentation
# 
# Most methods, in particular those exposed to user usage, are provided with docstrings. Consider reading these docstrings to learn about the most recent updates to the library.
# 
# ## Usage examples
# 
# ### Jones polynomial
# 
# The closure of the braid (s1 s2^-1)^2 is the figure-eight knot:
# 
def test_line_24():
    from weavekh import jones_w3
    
    result = jones_w3(2)
    assert str(result.v) == "t^-2 - t^-1 + 1 - t + t^2"
    assert result.is_knot and result.is_palindromic

# 
# When 3 divides n the closure is a 3-component link: its Jones polynomial is still returned, with a warning.
# 
# ### Khovanov ranks
# 
# The Khovanov table of W(3, n) stores the nonzero ranks, indexed by the homological degree i and the quantum degree j. The Betti line holds the ranks on the upper of the two diagonals supporting the homology.
# 
# One generator of the unknot pair sits at (0, 1), so the rank there exceeds the rank at (1, 3) by one. `h01` is the rank as computed; `h01_paired` leaves that generator out and matches the H^{0,1} values tabulated in the literature. A warning is logged when the two ranks differ this way.
# 
def test_line_40():
    from weavekh import khovanov_table, total_rank_line
    
    table = khovanov_table(10)
    assert total_rank_line(table) == 7563
    assert table.h01 == 971
    assert table.rank(1, 3) == 970
    assert table.h01_paired == 970

# 
# ### Normal fit of the Betti numbers
# 
# The normalized Betti numbers are fitted by a normal density, whose mean tends to 1/2 while the standard deviation grows with n.
# 
def test_line_54():
    from weavekh import fit_line, khovanov_table
    
    fit = fit_line(khovanov_table(10).betti_line, n=10)
    assert abs(fit.mu - 0.5) < 1e-3
    assert abs(fit.sigma - 2.64088) < 0.02

# 
# ### Statistics tables
# 
# A whole table for one residue class of n modulo 3 is computed with `build_table`, which returns a pandas DataFrame. Large integers are kept exact as text, with an additional scientific rendering when they exceed 19 digits. Rows whose Betti line admits no normal fit, as for n = 1 and n = 2, keep their integer columns and leave the fit columns empty.
# 
def test_line_66():
    from weavekh import build_table
    
    df = build_table(residue=2, start=11, end=14)
    assert df["total_dimension"].tolist() == ["19801", "355323"]
    assert df["dim_H01"].tolist() == ["2432", "38984"]
    assert df["dim_H01_paired"].tolist() == ["2431", "38983"]

# 
# ### Signatures of the weaving knots
# 
# The signature of W(p, q) is 0 for odd p and 1 - q for even p, and can be cross-checked against the count of circles in the all-A smoothing of the diagram.
# 
def test_line_79():
    from weavekh import signature_alternating, signature_closed_form, weaving_braid
    
    assert signature_closed_form(4, 5) == -4
    assert signature_alternating(weaving_braid(4, 5)) == -4

# 
# ## Command line interface
# 
# Installing the package provides the `weavekh` command:
# 
# ```shell
# weavekh jones -n 7
# weavekh betti -n 10
# weavekh fit -n 22 --format json --emit-density density.csv
# weavekh table --residue 1 --start 10 --end 100 --threads 0 --out table_one.csv
# weavekh signature -p 4 -q 5 --check-diagram
# weavekh verify --n-max 20

# 
# Every command accepts `--format text|json|csv`, `--out FILE`, `--no-meta` and `-v`. The `WEAVEKH_THREADS` environment variable overrides `--threads`. The exit code is 0 on success, 1 on input/output failures, 2 on usage errors, 3 when a computation breaks one of its contracts and 4 when a verification check fails.
