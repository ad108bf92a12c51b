"""Exception hierarchy. CLI maps every ``OrigamiLabError`` to exit code 1."""


class OrigamiLabError(Exception):
    """Base class for domain errors."""


class InvalidPermutation(OrigamiLabError):
    pass


class NotTransitive(OrigamiLabError):
    pass


class InvalidGenus(OrigamiLabError):
    pass


class KNotAdmissible(OrigamiLabError):
    pass


class VertexNotFound(OrigamiLabError):
    pass


class NotAMatching(OrigamiLabError):
    pass


class GapNotDiverging(OrigamiLabError):
    pass


class FibreMismatch(OrigamiLabError):
    pass


class TooLarge(OrigamiLabError):
    pass


class Disconnected(OrigamiLabError):
    pass


class ZeroFunction(OrigamiLabError):
    pass


class NoConvergence(OrigamiLabError):
    pass


class ContainsOrigin(OrigamiLabError):
    pass


class NotAnRLoop(OrigamiLabError):
    pass


class OverflowGuard(OrigamiLabError):
    pass
