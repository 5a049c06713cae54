"""Static tables for the bundled classification catalog.

Everything in this module is data, transcribed as printed in the source
tables; nothing here is computed.  Conventions:

* ``left`` / ``right`` / ``circ`` / ``star`` / ``prec`` / ``succ`` map an
  input pair ``(i, j)`` (1-based) to ``{k: coeff}``, read as
  "e_i * e_j = sum coeff * e_k".  Unlisted pairs are zero.
* ``alpha`` maps an input index ``j`` to ``{i: coeff}``, read as
  "alpha(e_j) = sum coeff * e_i".  Unlisted inputs map to zero.
* A coefficient is an int, a rational string such as ``"-1/2"``, a bare
  parameter letter such as ``"a"``, or ``"<param>*<const>"`` /
  ``"<const>"`` where the named constants live in ``COMPLEX_CONSTANTS``.
* Claimed derivation/centroid matrices keep the printed orientation:
  pattern row i, column j is the coefficient of e_j in the image of e_i.

Deviations from the printed tables are never silent; each carries a
``notes`` string here and a structured annotation downstream.
"""

import cmath

# Constants appearing in the complex-backend entries.  w1 and w2 are the
# principal values of (-1)^(1/3) and (-1)^(2/3); ist is i/sqrt(3).
COMPLEX_CONSTANTS = {
    "w1": cmath.exp(1j * cmath.pi / 3),
    "w2": cmath.exp(2j * cmath.pi / 3),
    "ist": 1j / cmath.sqrt(3),
    "w1ist": cmath.exp(1j * cmath.pi / 3) * (1j / cmath.sqrt(3)),
    "m1pw2": -1 + cmath.exp(2j * cmath.pi / 3),
}

DIALGEBRAS = {
    # ------------------------------------------------------------------
    # dimension 2
    # ------------------------------------------------------------------
    "Hd2.1": {
        "dim": 2,
        "scalars": "rational",
        "left": {(1, 1): {1: 1}, (1, 2): {1: 1}, (2, 1): {2: 1}, (2, 2): {2: 1}},
        "right": {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {1: 1}, (2, 2): {2: 1}},
        "alpha": {1: {1: 1}, 2: {2: 1}},
    },
    "Hd2.2": {
        "dim": 2,
        "scalars": "rational",
        "left": {(1, 2): {2: 1}, (2, 1): {1: 1}},
        "right": {(1, 1): {1: 1}, (2, 1): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd2.3": {
        "dim": 2,
        "scalars": "rational",
        "left": {(2, 2): {1: "-1/2", 2: -1}},
        "right": {(2, 1): {1: 1}, (2, 2): {1: -1, 2: -1}},
        "alpha": {1: {1: -1}, 2: {1: 1, 2: 1}},
    },
    "Hd2.4": {
        "dim": 2,
        "scalars": "rational",
        "left": {(1, 2): {1: 1}, (2, 2): {1: 1, 2: 1}},
        "right": {(1, 2): {1: 1}, (2, 2): {1: 1, 2: 1}},
        "alpha": {1: {1: 1}, 2: {1: 1, 2: 1}},
    },
    "Hd2.5": {
        "dim": 2,
        "scalars": "rational",
        "left": {(1, 2): {1: 1}, (2, 1): {1: 1}, (2, 2): {1: 1}},
        "right": {(2, 1): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd2.6": {
        "dim": 2,
        "scalars": "rational",
        "left": {(1, 2): {1: 1}, (2, 2): {2: 1}},
        "right": {(2, 1): {1: 1}, (2, 2): {1: 1}},
        "alpha": {1: {1: 1}, 2: {2: 1}},
    },
    "Hd2.7": {
        "dim": 2,
        "scalars": "rational",
        "left": {(1, 1): {1: 1, 2: 1}},
        "right": {(1, 1): {1: 1}, (1, 2): {1: 1}},
        "alpha": {1: {1: 1}, 2: {2: 1}},
    },
    "Hd2.8": {
        "dim": 2,
        "scalars": "rational",
        "left": {(1, 2): {1: 1}, (2, 1): {1: 1}, (2, 2): {1: 1}},
        "right": {(2, 2): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd2.9": {
        "dim": 2,
        "scalars": "rational",
        "params": ("a", "b", "c", "f", "g", "k"),
        "left": {(1, 2): {1: "a"}, (2, 2): {1: "b", 2: "c"}},
        "right": {(2, 1): {1: "f"}, (2, 2): {1: "g", 2: "k"}},
        "alpha": {1: {1: 1}, 2: {1: 1, 2: 1}},
    },
    # ------------------------------------------------------------------
    # dimension 3
    # ------------------------------------------------------------------
    "Hd3.1": {
        "dim": 3,
        "scalars": "rational",
        "left": {(2, 2): {1: 1}, (2, 3): {1: 1}, (3, 2): {1: 1}, (3, 3): {2: 1}},
        "right": {(2, 2): {1: 1}, (2, 3): {1: 1}, (3, 3): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd3.2": {
        "dim": 3,
        "scalars": "rational",
        "left": {(2, 1): {1: 1}, (2, 3): {1: 1}, (3, 2): {1: 1}, (3, 3): {2: 1}},
        "right": {(2, 2): {1: 1}, (2, 3): {2: 1}, (3, 3): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd3.3": {
        "dim": 3,
        "scalars": "rational",
        "left": {(2, 2): {1: 1}, (2, 3): {1: 1}, (3, 2): {1: 1}, (3, 3): {1: 1}},
        "right": {(2, 2): {1: 1}, (2, 3): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd3.4": {
        "dim": 3,
        "scalars": "rational",
        "left": {(2, 2): {1: 1}, (2, 3): {1: 1}, (3, 2): {1: 1}, (3, 3): {1: 1}},
        "right": {(2, 2): {1: 1}, (2, 3): {1: 1}, (3, 3): {1: 1}},
        "alpha": {1: {1: 1}},
    },
    "Hd3.5": {
        "dim": 3,
        "scalars": "rational",
        "left": {(1, 1): {1: 1}, (2, 2): {2: 1}, (3, 2): {2: 1}},
        "right": {(1, 1): {1: 1}, (2, 2): {2: 1}},
        "alpha": {1: {1: 1}},
    },
    "Hd3.6": {
        "dim": 3,
        "scalars": "rational",
        "left": {(1, 2): {1: 1}, (2, 1): {1: 1}, (2, 2): {1: 1}, (2, 3): {1: 1},
                 (3, 2): {3: 1}},
        "right": {(1, 2): {1: 1}, (2, 1): {1: 1}, (2, 2): {1: 1}, (2, 3): {3: 1},
                  (3, 2): {3: 1}, (3, 3): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd3.7": {
        "dim": 3,
        "scalars": "rational",
        "left": {(2, 2): {2: 1}, (2, 3): {1: 1}, (3, 3): {3: 1}},
        "right": {(2, 2): {2: 1}, (2, 3): {1: 1}, (3, 2): {1: 1}, (3, 3): {1: 1}},
        "alpha": {1: {1: 1}},
    },
    "Hd3.8": {
        "dim": 3,
        "scalars": "rational",
        "left": {(2, 2): {2: 1}, (2, 3): {2: 1}},
        "right": {(2, 2): {2: 1}, (2, 3): {2: 1}, (3, 2): {1: 1}},
        "alpha": {1: {1: 1}},
    },
    "Hd3.9": {
        "dim": 3,
        "scalars": "rational",
        "left": {(2, 2): {2: 1}, (2, 3): {2: 1}},
        "right": {(2, 2): {2: 1}, (2, 3): {2: 1}, (3, 2): {1: 1}, (3, 3): {3: 1}},
        "alpha": {1: {1: 1}},
    },
    "Hd3.10": {
        "dim": 3,
        "scalars": "rational",
        "left": {(1, 2): {1: 1}, (2, 1): {1: 1}, (2, 3): {1: 1}, (3, 2): {3: 1}},
        "right": {(1, 2): {1: 1}, (2, 2): {1: 1}, (2, 3): {3: 1}, (3, 2): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd3.11": {
        "dim": 3,
        "scalars": "complex",
        "params": ("a", "b", "c", "d", "f", "g"),
        "left": {(1, 2): {1: "w2"}, (2, 1): {1: "a"}, (2, 2): {1: "b", 3: "c"},
                 (2, 3): {1: 1, 3: "d"}, (3, 2): {1: 1, 3: "w2"}, (3, 3): {1: "ist"}},
        "right": {(1, 2): {1: "w2"}, (2, 1): {1: "f"}, (2, 2): {1: 1, 3: "g*w2"},
                  (3, 2): {1: 1, 3: 1}, (3, 3): {1: "ist"}},
        "alpha": {2: {1: 1}},
    },
    "Hd3.12": {
        "dim": 3,
        "scalars": "rational",
        "left": {(1, 2): {1: 1}, (2, 1): {1: 1}, (2, 2): {1: 1, 3: 1},
                 (2, 3): {1: 1, 3: 1}, (3, 2): {1: 1, 3: 1}, (3, 3): {3: 1}},
        "right": {(1, 2): {1: 1}, (2, 1): {1: 1}, (2, 2): {1: 1, 3: 1},
                  (2, 3): {1: 1, 3: 1}, (3, 2): {1: 1, 3: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd3.13": {
        "dim": 3,
        "scalars": "complex",
        "params": ("a", "b", "c"),
        "left": {(1, 1): {2: "w1"}, (1, 3): {2: "a"}, (3, 1): {2: "b"},
                 (3, 3): {2: "w1ist"}},
        "right": {(1, 1): {2: "w1"}, (1, 3): {1: "c"}, (3, 1): {2: "w1ist"}},
        "alpha": {1: {1: 1}, 2: {2: 1}, 3: {3: 1}},
    },
    "Hd3.14": {
        "dim": 3,
        "scalars": "complex",
        "params": ("a", "b", "c", "d", "f", "g", "h"),
        "left": {(1, 1): {1: 1, 3: "a*w2"}, (1, 3): {3: "b"},
                 (3, 1): {1: "ist", 3: "c*m1pw2"}},
        "right": {(1, 1): {1: 1, 3: "d*w2"}, (1, 3): {1: 1}, (2, 2): {1: "f", 3: "g"},
                  (3, 1): {1: 1, 3: "h*w2"}, (3, 3): {1: 1, 3: "ist"}},
        "alpha": {2: {2: 1}},
    },
    # ------------------------------------------------------------------
    # dimension 4
    # ------------------------------------------------------------------
    "Hd4.1": {
        "dim": 4,
        "scalars": "rational",
        "params": ("a",),
        "left": {(1, 2): {1: 1}, (1, 4): {3: 1}, (2, 1): {1: 1}, (2, 3): {3: "a"},
                 (2, 4): {1: 1}, (3, 2): {1: 1}, (3, 4): {1: 1}, (4, 1): {3: 1},
                 (4, 4): {1: 1}},
        "right": {(1, 2): {1: 1}, (1, 4): {3: 1}, (2, 2): {3: 1}, (2, 3): {1: 1},
                  (2, 4): {1: 1}, (3, 2): {1: 1}, (3, 4): {1: 1}, (4, 2): {1: 1},
                  (4, 3): {1: 1}, (4, 4): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd4.2": {
        "dim": 4,
        "scalars": "rational",
        "left": {(1, 4): {3: 1}, (2, 1): {1: 1}, (2, 2): {3: 1}, (2, 3): {1: 1},
                 (2, 4): {1: 1}, (3, 2): {1: 1}, (3, 4): {1: 1}, (4, 1): {3: 1},
                 (4, 4): {1: 1}},
        "right": {(1, 2): {1: 1}, (1, 4): {3: 1}, (2, 2): {3: 1}, (2, 3): {1: 1},
                  (2, 4): {1: 1}, (3, 2): {1: 1}, (3, 4): {1: 1}, (4, 2): {1: 1},
                  (4, 3): {1: 1}, (4, 4): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd4.3": {
        "dim": 4,
        "scalars": "rational",
        "left": {(1, 4): {3: 1}, (2, 1): {1: 1}, (2, 2): {1: 1, 3: 1}, (2, 3): {1: 1},
                 (2, 4): {1: 1}, (3, 2): {1: 1}, (3, 4): {1: 1}, (4, 1): {3: 1},
                 (4, 4): {1: 1}},
        "right": {(1, 2): {1: 1}, (1, 4): {3: 1}, (2, 2): {3: 1}, (2, 3): {1: 1},
                  (2, 4): {3: 1}, (3, 2): {1: 1}, (3, 4): {1: 1}, (4, 2): {1: 1},
                  (4, 3): {1: 1}, (4, 4): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "Hd4.4": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 3): {1: 1, 3: 1}, (3, 2): {1: 1, 3: 1}, (3, 4): {1: 1, 3: 1},
                 (4, 1): {3: 1}, (4, 3): {1: 1, 3: 1}, (4, 4): {1: 1, 3: 1}},
        "right": {(1, 2): {1: 1}, (1, 4): {3: 1}, (2, 3): {1: 1, 3: 1},
                  (2, 4): {1: 1, 3: 1}, (3, 2): {1: 1, 3: 1}, (3, 4): {1: 1, 3: 1},
                  (4, 3): {1: 1, 3: 1}, (4, 4): {1: 1, 3: 1}},
        "alpha": {2: {1: 1}, 4: {3: 1}},
    },
    "Hd4.5": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 3): {3: 1}, (2, 4): {1: 1, 3: 1}, (3, 2): {1: 1, 3: 1},
                 (3, 4): {1: 1, 3: 1}, (4, 1): {3: 1}, (4, 3): {1: 1, 3: 1},
                 (4, 4): {1: 1, 3: 1}},
        "right": {(2, 1): {1: 1}, (2, 3): {1: 1, 3: 1}, (2, 4): {1: 1, 3: 1},
                  (3, 2): {1: 1, 3: 1}, (3, 4): {1: 1, 3: 1}, (4, 3): {1: 1, 3: 1},
                  (4, 4): {1: 1, 3: 1}},
        "alpha": {2: {1: 1}, 4: {3: 1}},
    },
    "Hd4.6": {
        "dim": 4,
        "scalars": "rational",
        "left": {(1, 2): {3: 1}, (2, 3): {1: 1, 3: 1}, (2, 4): {1: 1, 3: 1},
                 (3, 2): {1: 1, 3: 1}, (3, 4): {1: 1}, (4, 2): {3: 1},
                 (4, 3): {1: 1, 3: 1}, (4, 4): {1: 1, 3: 1}},
        "right": {(2, 1): {1: 1}, (2, 3): {1: 1, 3: 1}, (2, 4): {1: 1, 3: 1},
                  (3, 2): {1: 1, 3: 1}, (3, 4): {1: 1, 3: 1}, (4, 3): {1: 1, 3: 1}},
        "alpha": {2: {1: 1}, 4: {3: 1}},
    },
    "Hd4.7": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 3): {4: 1}, (3, 2): {4: 1}, (3, 4): {4: 1}, (4, 3): {4: 1},
                 (4, 4): {2: 1, 4: 1}},
        "right": {(3, 2): {2: 1}, (3, 4): {2: 1, 4: 1}, (4, 3): {2: 1, 4: 1},
                  (4, 4): {2: 1, 4: 1}},
        "alpha": {1: {1: 1}, 2: {2: 1}},
    },
    "Hd4.8": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 3): {4: 1}, (3, 2): {4: 1}, (3, 3): {4: 1}, (3, 4): {4: 1},
                 (4, 3): {4: 1}, (4, 4): {4: 1}},
        "right": {(3, 2): {2: 1}, (3, 4): {2: 1, 4: 1}, (4, 3): {2: 1, 4: 1},
                  (4, 4): {2: 1, 4: 1}},
        "alpha": {1: {1: 1}, 2: {2: 1}},
    },
    "Hd4.9": {
        "dim": 4,
        "scalars": "rational",
        "left": {(1, 1): {1: 1}, (2, 4): {1: 1}, (3, 3): {2: 1}, (3, 4): {1: 1},
                 (4, 1): {1: 1}, (4, 2): {1: 1}, (4, 3): {1: 1}, (4, 4): {1: 1}},
        "right": {(2, 4): {2: 1}, (3, 3): {2: 1}, (3, 4): {1: 1, 2: 1},
                  (4, 3): {1: 1, 2: 1}, (4, 4): {2: 1}},
        "alpha": {2: {2: 1}, 3: {3: 1}},
    },
    # The printed Hd4.10 and Hd4.12 lists repeat their "e2 -| e4" line in the
    # middle of the |- run; sorted flow makes the second occurrence the right
    # product, and only that reading is recorded below (see notes).
    "Hd4.10": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 2): {2: 1, 4: 1}, (2, 4): {2: 1, 4: 1}, (3, 3): {1: 1},
                 (4, 4): {4: 1}},
        "right": {(2, 2): {2: 1, 4: 1}, (2, 4): {2: 1, 4: 1}, (3, 3): {2: 1, 4: 1},
                  (4, 2): {4: 1}, (4, 4): {2: 1, 4: 1}},
        "alpha": {1: {1: 1}, 3: {3: 1}},
        "notes": "printed (2,4) line carries the left-product symbol both times",
    },
    "Hd4.11": {
        "dim": 4,
        "scalars": "rational",
        "left": {(1, 2): {1: 1}, (2, 1): {1: 1}, (2, 2): {1: 1}, (2, 3): {1: 1},
                 (3, 2): {1: 1}, (4, 2): {1: 1}, (4, 4): {3: 1}},
        "right": {(1, 2): {1: 1}, (2, 2): {1: 1}, (2, 3): {1: 1}, (2, 4): {1: 1, 3: 1},
                  (4, 2): {1: 1, 3: 1}, (4, 4): {1: 1}},
        "alpha": {3: {3: 1}, 4: {4: 1}},
    },
    "Hd4.12": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 2): {2: 1, 4: 1}, (2, 4): {2: 1, 4: 1}, (3, 3): {1: 1},
                 (4, 2): {2: 1}, (4, 4): {4: 1}},
        "right": {(2, 2): {2: 1, 4: 1}, (2, 4): {2: 1, 4: 1}, (3, 3): {2: 1, 4: 1},
                  (4, 2): {4: 1}, (4, 4): {2: 1, 4: 1}},
        "alpha": {1: {1: 1}, 3: {3: 1}},
        "notes": "printed (2,4) line carries the left-product symbol both times",
    },
    # Hd4.13 / Hd4.14 print "e3 -| e2" in the middle of the |- run; the
    # sorted-flow reading (a right product) is recorded, see notes.
    "Hd4.13": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 2): {2: 1}, (2, 3): {2: 1, 3: 1}, (3, 3): {2: 1},
                 (4, 4): {1: 1}},
        "right": {(2, 2): {1: 1, 3: 1}, (2, 3): {2: 1}, (3, 2): {1: 1, 3: 1},
                  (3, 3): {1: 1, 3: 1}, (4, 4): {1: 1, 2: 1}},
        "alpha": {1: {1: 1}, 4: {4: 1}},
        "notes": "printed (3,2) line carries the left-product symbol",
    },
    "Hd4.14": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 2): {2: 1}, (2, 3): {2: 1, 3: 1}, (3, 3): {2: 1, 3: 1},
                 (4, 4): {1: 1}},
        "right": {(2, 2): {1: 1, 3: 1}, (2, 3): {1: 1, 2: 1}, (3, 2): {1: 1, 3: 1},
                  (3, 3): {1: 1, 3: 1}, (4, 4): {1: 1, 2: 1}},
        "alpha": {1: {1: 1}, 4: {4: 1}},
        "notes": "printed (3,2) line carries the left-product symbol",
    },
    "Hd4.15": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 4): {1: 1}, (3, 3): {2: 1}, (3, 4): {1: 1}, (4, 1): {1: 1},
                 (4, 2): {1: 1}, (4, 3): {1: 1}, (4, 4): {1: 1}},
        "right": {(2, 4): {2: 1}, (3, 3): {1: 1, 2: 1}, (3, 4): {1: 1, 2: 1},
                  (4, 1): {1: 1, 2: 1}, (4, 2): {1: 1, 2: 1}, (4, 3): {1: 1, 2: 1}},
        "alpha": {2: {2: 1}, 3: {3: 1}},
    },
    "Hd4.16": {
        "dim": 4,
        "scalars": "rational",
        "left": {(2, 4): {1: 1}, (3, 3): {2: 1}, (3, 4): {1: 1}, (4, 1): {1: 1},
                 (4, 2): {1: 1}, (4, 3): {1: 1}, (4, 4): {1: 1}},
        "right": {(2, 4): {1: 1, 2: 1}, (3, 3): {2: 1}, (3, 4): {1: 1, 2: 1},
                  (4, 1): {1: 1, 2: 1}, (4, 2): {1: 1, 2: 1}, (4, 4): {2: 1}},
        "alpha": {2: {2: 1}, 3: {3: 1}},
    },
    "Hd4.17": {
        "dim": 4,
        "scalars": "rational",
        "left": {(1, 4): {1: 1}, (2, 4): {1: 1}, (3, 3): {2: 1}, (3, 4): {1: 1},
                 (4, 1): {1: 1}, (4, 2): {1: 1}, (4, 3): {1: 1}, (4, 4): {1: 1}},
        "right": {(2, 4): {1: 1, 2: 1}, (3, 3): {1: 1, 2: 1}, (4, 2): {2: 1},
                  (4, 3): {1: 1, 2: 1}, (4, 4): {2: 1}},
        "alpha": {2: {2: 1}, 3: {3: 1}},
    },
    "Hd4.18": {
        "dim": 4,
        "scalars": "rational",
        "left": {(1, 2): {3: 1, 4: 1}, (2, 1): {3: 1, 4: 1}, (2, 2): {3: 1, 4: 1},
                 (2, 3): {3: 1, 4: 1}, (2, 4): {3: 1, 4: 1}, (3, 2): {3: 1, 4: 1},
                 (3, 3): {3: 1, 4: 1}, (3, 4): {3: 1, 4: 1}, (4, 2): {3: 1, 4: 1}},
        "right": {(1, 1): {3: 1, 4: 1}, (2, 2): {3: 1, 4: 1}, (2, 3): {3: 1, 4: 1},
                  (3, 2): {3: 1, 4: 1}, (4, 4): {3: 1, 4: 1}},
        "alpha": {2: {1: 1}},
    },
    # Hd4.19 as printed contains the line "e2 -| f e3 = e3 + e4", which does
    # not parse (the operand is not a basis vector).  Recorded literally as
    # e2 -| e3 = e3 + e4 with f kept as an unused parameter.
    "Hd4.19": {
        "dim": 4,
        "scalars": "complex",
        "params": ("a", "b", "c", "d", "f", "h", "l", "m", "n", "o", "p"),
        "unused_params": ("f",),
        "left": {(1, 2): {3: "a", 4: "b"}, (2, 1): {3: 1, 4: "c"},
                 (2, 2): {3: 1, 4: "d"}, (2, 3): {3: 1, 4: 1},
                 (2, 4): {3: "h", 4: 1}, (3, 2): {3: "l", 4: 1},
                 (3, 3): {3: 1, 4: 1}, (3, 4): {3: 1, 4: 1}, (4, 2): {3: 1, 4: 1}},
        "right": {(1, 1): {3: "m", 4: "n"}, (2, 2): {3: "o", 4: "p"},
                  (2, 3): {3: "c", 4: "d"}, (3, 2): {3: 1}, (4, 4): {4: 1}},
        "alpha": {2: {1: 1}},
        "notes": "printed (2,3) left line is malformed; literal reading kept",
    },
    "Hd4.20": {
        "dim": 4,
        "scalars": "complex",
        "params": ("a", "b", "c", "d", "f", "g", "h", "k", "l"),
        "left": {(2, 1): {3: 1, 4: "a"}, (2, 2): {3: 1, 4: "b"},
                 (2, 3): {3: "c", 4: "d"}, (2, 4): {3: 1, 4: 1},
                 (3, 2): {3: "f", 4: "g"}, (3, 3): {3: 1, 4: 1},
                 (3, 4): {3: 1, 4: 1}, (4, 2): {3: 1, 4: 1}},
        "right": {(1, 1): {3: 1, 4: 1}, (2, 2): {3: "h", 4: 1},
                  (2, 3): {3: "k", 4: 1}, (3, 2): {3: "l"}, (4, 3): {3: 1},
                  (4, 4): {4: 1}},
        "alpha": {2: {1: 1}},
    },
}

# Worked examples of the satellite structures, as printed.
SATELLITES = {
    "dend2.1": {
        "kind": "dendriform",
        "dim": 2,
        "scalars": "rational",
        "prec": {(2, 1): {1: 1}, (2, 2): {1: 1}},
        "succ": {(1, 2): {1: 1}, (2, 1): {1: 1}, (2, 2): {1: 1}},
        "alpha": {2: {1: 1}},
    },
    "dend3.1": {
        "kind": "dendriform",
        "dim": 3,
        "scalars": "rational",
        "prec": {(1, 1): {1: 1}, (3, 2): {3: 1}, (3, 3): {3: 1}},
        "succ": {(2, 3): {3: 1}, (3, 3): {3: 1}},
        "alpha": {1: {1: 1}},
    },
    "zin2.1": {
        "kind": "zinbiel",
        "dim": 2,
        "scalars": "rational",
        "circ": {(1, 2): {1: 1}, (2, 2): {1: 1}},
        "alpha": {1: {1: 1}, 2: {2: 1}},
    },
    "zin2.2": {
        "kind": "zinbiel",
        "dim": 2,
        "scalars": "rational",
        "circ": {(1, 1): {1: 1}, (2, 2): {1: 1}},
        "alpha": {1: {1: 1}, 2: {1: 1, 2: 1}},
    },
    "zin2.3": {
        "kind": "zinbiel",
        "dim": 2,
        "scalars": "rational",
        "circ": {(1, 1): {2: 1}, (2, 1): {2: -1}},
        "alpha": {1: {1: 1}, 2: {1: 1, 2: 1}},
    },
    "dip3.1": {
        "kind": "dipterous",
        "dim": 3,
        "scalars": "rational",
        "side": "right",
        "star": {(1, 2): {3: 1}, (3, 2): {3: 1}, (3, 3): {3: 1}},
        "prec": {(1, 2): {3: 1}, (2, 3): {3: 1}},
        "alpha": {1: {1: 1}},
    },
    "dip3.2": {
        "kind": "dipterous",
        "dim": 3,
        "scalars": "rational",
        "side": "right",
        "star": {(1, 1): {1: 1}, (1, 2): {3: 1}, (3, 2): {3: 1}, (3, 3): {3: 1}},
        "prec": {(1, 2): {3: 1}, (2, 3): {3: 1}},
        "alpha": {1: {1: 1}},
    },
}

# Claimed derivation spaces: printed matrix pattern (row = input basis
# vector) and the printed dimension.  Entries absent from the printed
# tables are absent here.
DERIVATION_CLAIMS = {
    "Hd2.4": {"pattern": [[0, 0], ["d21", 0]], "dim": 1},
    "Hd2.5": {"pattern": [[0, 0], ["d21", 0]], "dim": 1},
    "Hd2.6": {"pattern": [[0, 0], ["d21", 0]], "dim": 1},
    "Hd2.8": {"pattern": [[0, 0], ["d21", 0]], "dim": 1},
    "Hd3.1": {"pattern": [[0, 0, 0], [0, 0, 0], ["d31", 0, "d33"]], "dim": 2},
    "Hd3.2": {"pattern": [[0, 0, 0], [0, 0, 0], ["d31", 0, "d33"]], "dim": 2},
    "Hd3.3": {"pattern": [[0, 0, 0], ["d21", 0, "d23"], ["d31", 0, "d33"]], "dim": 4},
    "Hd3.4": {"pattern": [[0, 0, 0], [0, "d22", "d23"], [0, "d32", "d33"]], "dim": 4},
    "Hd3.5": {"pattern": [[0, 0, 0], [0, 0, 0], [0, "d32", "d33"]], "dim": 2},
    "Hd3.8": {"pattern": [[0, 0, 0], [0, 0, 0], [0, "d32", "d33"]], "dim": 2},
    "Hd3.10": {"pattern": [[0, 0, 0], ["d21", 0, "d23"], [0, 0, 0]], "dim": 2},
    "Hd3.11": {"pattern": [[0, 0, 0], ["d21", 0, "d23"], [0, 0, 0]], "dim": 2},
    "Hd3.12": {"pattern": [[0, 0, 0], [0, 0, "d23"], [0, 0, 0]], "dim": 1},
    "Hd3.13": {"pattern": [[0, 0, 0], [0, 0, 0], [0, "d32", 0]], "dim": 1},
    "Hd4.1": {"pattern": [[0, 0, 0, 0], ["d21", 0, "d23", 0], [0, 0, 0, 0],
                          ["d41", 0, "d43", 0]], "dim": 4},
    "Hd4.2": {"pattern": [[0, 0, 0, 0], ["d21", 0, "d23", 0], [0, 0, 0, 0],
                          ["d41", 0, "d43", 0]], "dim": 2},
    "Hd4.3": {"pattern": [[0, 0, 0, 0], ["d21", 0, "d23", 0], [0, 0, 0, 0],
                          ["d41", 0, "d43", 0]], "dim": 4},
    "Hd4.4": {"pattern": [[0, 0, 0, 0], ["d21", 0, "d23", 0], [0, 0, 0, 0],
                          ["d41", 0, "d43", 0]], "dim": 4},
    "Hd4.5": {"pattern": [[0, 0, 0, 0], ["d21", 0, "d23", 0], [0, 0, 0, 0],
                          ["d41", 0, "d43", 0]], "dim": 4},
    "Hd4.6": {"pattern": [[0, 0, 0, 0], ["d21", 0, "d23", 0], [0, 0, 0, 0],
                          ["d41", 0, "d43", 0]], "dim": 4},
    "Hd4.7": {"pattern": [["d11", "d12", 0, 0], [0, 0, 0, 0], [0, 0, 0, "d34"],
                          [0, 0, 0, 0]], "dim": 3},
    "Hd4.8": {"pattern": [["d11", "d12", 0, 0], [0, 0, 0, 0], [0, 0, 0, "d34"],
                          [0, 0, 0, 0]], "dim": 3},
    "Hd4.9": {"pattern": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                          ["d41", 0, 0, 0]], "dim": 1},
    "Hd4.10": {"pattern": [[0, 0, 0, 0], [0, 0, 0, 0], ["d31", 0, 0, 0],
                           [0, 0, 0, 0]], "dim": 1},
    "Hd4.11": {"pattern": [[0, 0, 0, 0], ["d21", 0, 0, 0], [0, 0, 0, 0],
                           [0, 0, "d43", 0]], "dim": 1},
    "Hd4.12": {"pattern": [[0, 0, 0, 0], [0, 0, 0, 0], ["d31", 0, 0, 0],
                           [0, 0, 0, 0]], "dim": 1},
    "Hd4.13": {"pattern": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                           ["d41", 0, 0, 0]], "dim": 1},
    "Hd4.14": {"pattern": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                           ["d41", 0, 0, 0]], "dim": 1},
    "Hd4.15": {"pattern": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                           ["d41", 0, 0, 0]], "dim": 1},
    "Hd4.16": {"pattern": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                           ["d41", 0, 0, 0]], "dim": 1},
    # the (3,3) cell is printed with subscript 23; position wins
    "Hd4.17": {"pattern": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, "d23", 0],
                           ["d41", 0, 0, 0]], "dim": 2},
    "Hd4.18": {"pattern": [[0, 0, 0, 0], [0, 0, "d23", "d24"],
                           [0, 0, "-d23", "-d24"], [0, 0, "d23", "d24"]], "dim": 2},
    "Hd4.19": {"pattern": [[0, 0, 0, 0], [0, 0, "d23", "d24"], [0, 0, 0, 0],
                           [0, 0, 0, 0]], "dim": 2},
    "Hd4.20": {"pattern": [[0, 0, 0, 0], [0, 0, "d23", "d24"], [0, 0, 0, 0],
                           [0, 0, 0, 0]], "dim": 2},
}

CENTROID_CLAIMS = {
    "Hd2.1": {"pattern": [["c11", 0], [0, "c22"]], "dim": 2},
    "Hd2.2": {"pattern": [[0, 0], ["c21", 0]], "dim": 1},
    "Hd2.3": {"pattern": [["-c11", 0], ["c21", "c22"]], "dim": 3},
    "Hd2.4": {"pattern": [["c11", 0], ["c21", "c22"]], "dim": 3},
    "Hd2.5": {"pattern": [[0, 0], ["c21", 0]], "dim": 1},
    "Hd2.6": {"pattern": [["c11", 0], [0, "c22"]], "dim": 2},
    "Hd2.7": {"pattern": [["c11", 0], [0, "c22"]], "dim": 2},
    "Hd2.8": {"pattern": [[0, 0], ["c21", 0]], "dim": 1},
    "Hd2.9": {"pattern": [["c11", 0], ["c21", "c22"]], "dim": 3},
    "Hd3.1": {"pattern": [[0, 0, 0], ["c21", 0, 0], ["c31", 0, 0]], "dim": 2},
    "Hd3.2": {"pattern": [[0, 0, 0], ["c21", 0, 0], ["c31", 0, 0]], "dim": 2},
    "Hd3.3": {"pattern": [["c11", 0, 0], ["c21", "c11", "c11"], ["c31", 0, 0]],
              "dim": 3},
    "Hd3.4": {"pattern": [["c11", 0, 0], [0, 0, 0], [0, 0, 0]], "dim": 1},
    "Hd3.5": {"pattern": [[0, 0, 0], [0, 0, "c23"], [0, 0, "c33"]], "dim": 2},
    "Hd3.6": {"pattern": [[0, 0, 0], ["1/2 c21", 0, 0], ["c31", 0, 0]], "dim": 2},
    "Hd3.7": {"pattern": [["c11", 0, 0], [0, 0, 0], [0, 0, 0]], "dim": 1},
    "Hd3.8": {"pattern": [["c11", 0, 0], [0, 0, "c23"], [0, 0, "c33"]], "dim": 3},
    "Hd3.9": {"pattern": [["c11", 0, 0], [0, 0, 0], [0, 0, 0]], "dim": 1},
    "Hd3.10": {"pattern": [[0, 0, 0], ["c21", 0, "c23"], ["c31", 0, "c33"]],
               "dim": 4},
    "Hd3.11": {"pattern": [[0, 0, 0], ["c21", 0, 0], ["c31", 0, 0]], "dim": 2},
    "Hd3.12": {"pattern": [[0, 0, 0], ["c21", 0, 0], ["c31", 0, 0]], "dim": 2},
    "Hd3.13": {"pattern": [["c11", 0, 0], [0, "c22", 0], [0, 0, "c33"]], "dim": 3},
    "Hd3.14": {"pattern": [[0, 0, 0], [0, "c22", 0], [0, 0, 0]], "dim": 1},
    "Hd4.1": {"pattern": [[0, 0, 0, 0], ["c21", 0, "c23", 0], [0, 0, 0, 0],
                          ["c41", 0, "c43", 0]], "dim": 4},
    "Hd4.2": {"pattern": [[0, 0, 0, 0], ["c21", 0, "c23", 0], ["c31", 0, "c33", 0],
                          ["c41", 0, "c43", 0]], "dim": 6},
    "Hd4.3": {"pattern": [[0, 0, 0, 0], ["d21", 0, "d23", 0], ["c31", 0, "c33", 0],
                          ["d41", 0, "d43", 0]], "dim": 6},
    "Hd4.4": {"pattern": [[0, 0, 0, 0], ["c21", 0, 0, 0], [0, 0, 0, 0],
                          [0, 0, "c43", 0]], "dim": 2},
    "Hd4.5": {"pattern": [[0, 0, 0, 0], ["c21", 0, "c23", 0], [0, 0, 0, 0],
                          ["c41", 0, "c43", 0]], "dim": 4},
    "Hd4.6": {"pattern": [[0, 0, 0, 0], ["c21", 0, "c23", 0], [0, 0, 0, 0],
                          ["c41", 0, "c43", 0]], "dim": 4},
    "Hd4.7": {"pattern": [["c11", "c12", 0, 0], ["c21", "c22", 0, 0], [0, 0, 0, 0],
                          ["c41", 0, "c43", 0]], "dim": 4},
    "Hd4.8": {"pattern": [[0, "c12", 0, 0], [0, "c22", 0, 0], [0, 0, 0, 0],
                          [0, 0, 0, 0]], "dim": 2},
    "Hd4.9": {"pattern": [[0, 0, 0, 0], [0, "c22", 0, 0], [0, 0, "c33", 0],
                          [0, 0, 0, 0]], "dim": 2},
    "Hd4.10": {"pattern": [["c11", 0, 0, 0], [0, 0, 0, 0], ["c31", 0, 0, 0],
                           [0, 0, 0, 0]], "dim": 2},
    "Hd4.11": {"pattern": [["c11", 0, 0, 0], [0, 0, 0, 0], ["c31", 0, "c33", 0],
                           [0, 0, "c43", 0]], "dim": 4},
    "Hd4.12": {"pattern": [["c11", 0, 0, 0], [0, 0, 0, 0], ["c31", 0, 0, 0],
                           [0, 0, 0, 0]], "dim": 2},
    "Hd4.13": {"pattern": [["c11", 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                           ["c41", 0, 0, "c44"]], "dim": 3},
    "Hd4.14": {"pattern": [["c11", 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                           ["c41", 0, 0, 0]], "dim": 2},
    "Hd4.15": {"pattern": [[0, 0, 0, 0], [0, "c22", 0, 0], [0, "c32", 0, 0],
                           [0, 0, 0, 0]], "dim": 2},
    "Hd4.16": {"pattern": [["c11", 0, 0, 0], [0, "c22", 0, 0], [0, "c32", 0, 0],
                           ["c41", 0, 0, 0]], "dim": 4},
    "Hd4.17": {"pattern": [["c11", 0, 0, 0], [0, "c22", 0, 0], [0, "c32", 0, 0],
                           ["c41", 0, 0, 0]], "dim": 4},
    # the (2,1) cell is the nonlinear expression (1-sqrt(1-4*c21^2))/2;
    # no linear generator can be extracted from it
    "Hd4.18": {"pattern": [[0, 0, 0, 0], ["(1-sqrt(1-4c21^2))/2", 0, 0, "c24"],
                           [0, 0, 0, 0], [0, 0, 0, 0]], "dim": 2,
               "nonlinear": True},
}

# Printed dimension ranges, per dimension class: (low, high).
DERIVATION_RANGE_CLAIMS = {2: (0, 2), 3: (0, 3), 4: (1, 4)}
CENTROID_RANGE_CLAIMS = {2: (1, 3), 3: (1, 5), 4: (0, 6)}
