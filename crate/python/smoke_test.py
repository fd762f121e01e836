"""Smoke test for the c4free extension module.

Build and install first:  pip install maturin && maturin develop -m crates/python/Cargo.toml
"""

import c4free


def proper(g, colors):
    return all(colors[u] != colors[v] for u, v in g.edges())


def main():
    petersen = c4free.Graph.named("petersen")
    assert petersen.n == 10 and len(petersen.edges()) == 15
    assert c4free.girth(petersen) == 5
    assert c4free.clique_number(petersen) == 2
    assert c4free.find_induced(petersen, "C4") is None

    chi, colors = c4free.exact_chromatic(petersen)
    assert chi == 3 and proper(petersen, colors)

    coloring = c4free.color(petersen, "hammer", 3)
    assert coloring["used"] <= coloring["bound"] == 3
    assert c4free.verify_coloring(petersen, coloring["colors"], coloring["bound"])

    c5 = c4free.Graph.from_graph6("Dhc")
    assert c5 == c4free.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert c4free.find_hole(c5) == [0, 1, 2, 3, 4]
    assert not c4free.verify_coloring(c5, [0] * 5, 3)

    bowtie = c4free.Graph.named("bowtie")
    tree = c4free.decompose(bowtie, "bull")
    assert tree["kind"] == "clique-cutset" and tree["clique"] == [0]
    assert c4free.find_clique_cutset(bowtie)["clique"] == [0]

    bull = c4free.Graph.named("bull")
    assert c4free.find_induced(bull, "bull") is not None
    try:
        c4free.color(bull, "bull", 3)
    except ValueError as e:
        assert "bull" in str(e)
    else:
        raise AssertionError("bull is not bull-free")

    entries = c4free.check(c5, "centred-hole")
    assert [e["check"] for e in entries] == ["centred-hole-bull", "centred-hole-hammer"]
    assert all(e["pass"] for e in c4free.check(petersen, "structure-hammer"))

    quotient = c4free.blowup_quotient(c4free.Graph.named("K4"))
    assert quotient["quotient_graph6"] == "@" and quotient["bags"] == [[0, 1, 2, 3]]

    assert [len(c4free.connected_graphs(n)) for n in range(1, 6)] == [1, 1, 2, 6, 21]
    report = c4free.suite("P6-hammer", 6)
    assert report["failures"] == [] and report["max_colors_over_bound"] == 0

    print("smoke test passed")


if __name__ == "__main__":
    main()
