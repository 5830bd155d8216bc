class OrbifoldFusionError(ValueError):
    """Base class of every error raised by the package.

    Errors are either caused by the input (bad matrices, bad labels, unknown builders)
    or by an internal consistency check failing. The CLI maps the first kind to exit
    code 1 and :class:`VerificationFailure` to exit code 2.
    """

    internal = False


class NotSymmetric(OrbifoldFusionError):
    pass


class NotEven(OrbifoldFusionError):
    pass


class NotPositiveDefinite(OrbifoldFusionError):
    pass


class NotIsometry(OrbifoldFusionError):
    pass


class NotInvolution(OrbifoldFusionError):
    pass


class SingularMatrix(OrbifoldFusionError):
    pass


class OddNorm(OrbifoldFusionError):
    pass


class NonIntegralExponent(OrbifoldFusionError):
    pass


class NotCentral(OrbifoldFusionError):
    pass


class NotHalfLattice(OrbifoldFusionError):
    pass


class ModulusMismatch(OrbifoldFusionError):
    pass


class SettingMismatch(OrbifoldFusionError):
    pass


class UnknownBuilder(OrbifoldFusionError):
    pass


class BadParameter(OrbifoldFusionError):
    pass


class BadLabel(OrbifoldFusionError):
    pass


class Inconsistent(OrbifoldFusionError):
    internal = True


class NoCharacter(OrbifoldFusionError):
    internal = True


class VerificationFailure(OrbifoldFusionError):
    internal = True
