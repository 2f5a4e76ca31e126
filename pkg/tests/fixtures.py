from fuzzy_tools import FuzzyNumber, LinearPiece, GeneratorF, validate, make_w_p, make_Z_p_f


def tri(a: float, b: float, c: float) -> FuzzyNumber:
    return validate(FuzzyNumber.build(
        support=(a, c),
        core=(b, b),
        left=[LinearPiece.through(a, 0.0, b, 1.0)],
        right=[LinearPiece.through(b, 1.0, c, 0.0)]
    ))


def trapezoid(a: float, b: float, c: float, d: float) -> FuzzyNumber:
    return validate(FuzzyNumber.build(
        support=(a, d),
        core=(b, c),
        left=[LinearPiece.through(a, 0.0, b, 1.0)],
        right=[LinearPiece.through(c, 1.0, d, 0.0)]
    ))


def kinked() -> FuzzyNumber:
    """left branch bends at (1, 0.5), core [1.5, 2]"""
    return validate(FuzzyNumber.build(
        support=(0.0, 3.0),
        core=(1.5, 2.0),
        left=[LinearPiece.through(0.0, 0.0, 1.0, 0.5), LinearPiece.through(1.0, 0.5, 1.5, 1.0)],
        right=[LinearPiece.through(2.0, 1.0, 3.0, 0.0)]
    ))


def jumping() -> FuzzyNumber:
    """left branch jumps from 0.25 to 0.75 at x=1, core {2}"""
    return validate(FuzzyNumber.build(
        support=(0.0, 3.0),
        core=(2.0, 2.0),
        left=[LinearPiece.through(0.0, 0.0, 1.0, 0.25), LinearPiece.through(1.0, 0.75, 2.0, 1.0)],
        right=[LinearPiece.through(2.0, 1.0, 3.0, 0.0)]
    ))


def lifted() -> FuzzyNumber:
    """membership 0.2 at the left end of the support"""
    return validate(FuzzyNumber.build(
        support=(0.0, 2.0),
        core=(1.0, 1.0),
        left=[LinearPiece.through(0.0, 0.2, 1.0, 1.0)],
        right=[LinearPiece.through(1.0, 1.0, 2.0, 0.0)]
    ))


def split_peak() -> FuzzyNumber:
    """core {1}: the left branch ends at 0.5, the right one starts at 0.7"""
    return validate(FuzzyNumber.build(
        support=(0.0, 2.0),
        core=(1.0, 1.0),
        left=[LinearPiece.through(0.0, 0.0, 1.0, 0.5)],
        right=[LinearPiece.through(1.0, 0.7, 2.0, 0.0)]
    ))


def spike() -> FuzzyNumber:
    """both branches end at 0.5 around the isolated core point {1}"""
    return validate(FuzzyNumber.build(
        support=(0.0, 2.0),
        core=(1.0, 1.0),
        left=[LinearPiece.through(0.0, 0.0, 1.0, 0.5)],
        right=[LinearPiece.through(1.0, 0.5, 2.0, 0.0)]
    ))


def triangular_smoother(p: float) -> FuzzyNumber:
    return make_Z_p_f(GeneratorF.linear(), p)


def corpus():
    """(name, number) pairs used by the corpus-wide tests"""
    return [
        ('tri', tri(0.0, 1.0, 2.0)),
        ('trapezoid', trapezoid(0.0, 1.0, 2.0, 3.0)),
        ('w_p', make_w_p(0.5)),
        ('Z_p linear', triangular_smoother(0.5)),
        ('kinked', kinked()),
        ('jumping', jumping()),
        ('lifted', lifted()),
        ('split peak', split_peak()),
        ('spike', spike())
    ]
