"""Global configuration for the bricklayer toolkit"""

import logging


class Config:
    """Global toolkit configuration"""

    # Available verification suites
    VERIFY_SUITES = {
        "cycle": "Cycle Lemma: every (k,qk+p)-arrangement has exactly p q-dominating cuts",
        "strong": "Strong Cycle Lemma: good counts 1..qk+1 once each, nested good sets",
        "stronger": "Stronger Cycle Lemma: S-restricted counts 1..|S| once each, nested",
        "extended": "Extended Strong Cycle Lemma bounds, blocked tightness, augmentation",
        "position-sum": "Position-sums of 0-linearizations are distinct modulo l",
        "chung-feller": "Chung-Feller statistic is uniform over 0..n",
        "montagh": "Each l in 1..n is realized by exactly one rotation of an integer cycle",
        "bijection": "Stacks and q-satisfying strings correspond through f",
        "recurrences": "First-return, Hilton-Pedersen and Catalan recurrences match closed forms",
        "satisfying": "Closed-form q-satisfying counts match exhaustive enumeration",
        "raney": "q-Raney sequence counts and Raney start positions",
        "trees": "Plane tree counts and postorder round trips",
        "periodic": "Periodic arrangement not-good counts per leading-zero class",
        "ballot": "q-ballot strings and (k,qk+1)-arrangements are equinumerous",
    }

    # Default bounds per suite (names match the CLI flags)
    SUITE_DEFAULTS = {
        "cycle": {"max_size": 16, "q": 3},
        "strong": {"max_size": 16, "q": 3},
        "stronger": {"max_size": 12, "q": 3},
        "extended": {"max_size": 14, "q": 3, "p": 4, "m": 12},
        "position-sum": {"max_size": 16},
        "chung-feller": {"n": 7},
        "montagh": {"n": 8},
        "bijection": {"m": 10, "q": 3},
        "recurrences": {"m": 40, "q": 3, "n": 12, "k": 20},
        "satisfying": {"m": 18, "q": 3},
        "raney": {"k": 6, "q": 3},
        "trees": {"n": 5, "q": 3},
        "periodic": {"k": 3, "q": 3, "p": 2},
        "ballot": {"k": 6, "q": 3},
    }

    COUNT_KINDS = ["stacks", "satisfying", "catalan", "gcatalan", "raney", "trees", "table"]
    ENUMERATE_KINDS = ["stacks", "sequences", "arrangements", "raney", "trees"]
    MAP_DIRECTIONS = ["stack-to-seq", "seq-to-stack"]
    OUTPUT_FORMATS = ["text", "json"]

    # Safety caps
    DEFAULT_OUTPUT_CAP = 10 ** 5
    DEFAULT_CHECK_CAP = 10 ** 7
    CHUNG_FELLER_MAX_N = 10

    # Montagh sampling
    DEFAULT_SEED = 0
    MONTAGH_SAMPLES = 10 ** 4
    MONTAGH_MAX_LENGTH = 8
    MONTAGH_ENTRY_RANGE = 6
    MONTAGH_EXHAUSTIVE_LENGTH = 4
    MONTAGH_EXHAUSTIVE_RANGE = 3

    # Text forms
    ARRANGEMENT_PREFIX = "cyc:"
    LEAF_GLYPH = "·"

    # Integer cycle with hand-checked rotations, used as a fixed verify case
    REFERENCE_CYCLE = "2,-1,2,-5,3,-2,1,-2,3"
    REFERENCE_ROTATIONS = {
        1: (-5, 3, -2, 1, -2, 3, 2, -1, 2),
        5: (2, -1, 2, -5, 3, -2, 1, -2, 3),
        9: (3, 2, -1, 2, -5, 3, -2, 1, -2),
    }
    REFERENCE_TREE_SEQUENCES = {"0001001": 2, "0000101": 2, "0000011": 2}

    # Rendering glyphs
    BASE_GLYPH = "="
    EMPTY_GLYPH = " "
    BRICK_LEFT = "["
    BRICK_FILL = "#"
    BRICK_RIGHT = "]"
    SHAVED_LEFT = "/"
    SHAVED_FILL = "-"
    SHAVED_RIGHT = "\\"

    # Logging
    LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
    LOG_LEVEL = logging.WARNING

    @staticmethod
    def suite_bounds(suite: str, overrides: dict) -> dict:
        """Merge CLI overrides into the default bounds of a suite"""
        if suite not in Config.VERIFY_SUITES:
            raise ValueError(f"Invalid suite. Available suites: {list(Config.VERIFY_SUITES.keys())}")

        bounds = dict(Config.SUITE_DEFAULTS.get(suite, {}))
        for key, value in overrides.items():
            if value is not None:
                bounds[key] = value
        bad = {key: value for key, value in bounds.items() if value < 1}
        if bad:
            raise ValueError(f"Bounds for suite {suite} must be positive, got {bad}")
        return bounds
