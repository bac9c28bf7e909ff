"""Exception hierarchy shared by every module."""


class PamonaError(Exception):
    pass


class NotAssociative(PamonaError, ValueError):
    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"(x{i} x{j}) x{k} != x{i} (x{j} x{k})")


class OutOfRange(PamonaError, ValueError):
    def __init__(self, i, j, value=None):
        self.cell = (i, j)
        super().__init__(f"table entry at ({i}, {j}) is out of range: {value!r}")


class NotInverse(PamonaError, ValueError):
    pass


class NotAGroup(PamonaError, ValueError):
    pass


class NotASemilattice(PamonaError, ValueError):
    pass


class NotAMeetSemilattice(PamonaError, ValueError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"elements {a!r} and {b!r} have no greatest lower bound")


class NotAChain(PamonaError, ValueError):
    pass


class BadMorphism(PamonaError, ValueError):
    def __init__(self, e, f, reason):
        self.pair = (e, f)
        super().__init__(f"structure map ({e}, {f}): {reason}")


class NotPartialHom(PamonaError, ValueError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"partial homomorphism fails at ({x}, {y})")


class AtomImageNotSingletonIdempotent(PamonaError, ValueError):
    pass


class NoCandidate(PamonaError, LookupError):
    pass


class AmbiguousCandidate(PamonaError, LookupError):
    pass


class IdempotentImageNotIdentityMap(PamonaError, ValueError):
    pass


class NonUniqueGenerator(PamonaError, ValueError):
    pass


class EvenOrder(PamonaError, ValueError):
    pass


class RestrictionNotPA(PamonaError, ValueError):
    pass


class CarrierMismatch(PamonaError, ValueError):
    pass


class SizeCapExceeded(PamonaError, RuntimeError):
    pass


class OrderTooLarge(PamonaError, ValueError):
    pass


class ParseError(PamonaError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
