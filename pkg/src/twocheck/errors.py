"""Validation exceptions. Each carries the witness that breaks the law."""


class WitnessError(ValueError):
    """Base for validation failures; ``witness`` holds the offending instance."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# groups
class NonAssociative(WitnessError):
    pass


class NoIdentity(WitnessError):
    pass


class NoInverse(WitnessError):
    pass


class BadHomomorphism(WitnessError):
    pass


class NotAutomorphism(WitnessError):
    pass


class NotContravariant(WitnessError):
    pass


class IdentityNotFixed(WitnessError):
    pass


# groupoids
class BadComposition(WitnessError):
    pass


class MissingIdentity(WitnessError):
    pass


class MissingInverse(WitnessError):
    pass


class BoundaryMismatch(WitnessError):
    pass


class BadFunctor(WitnessError):
    pass


class ActionInvalid(WitnessError):
    pass


class SectionArrowNotLandingInSub(WitnessError):
    pass


class QuasiInverseInvalid(WitnessError):
    pass


# two-groups
class EquivarianceFail(WitnessError):
    pass


class PeifferFail(WitnessError):
    pass


class NotAStrictTwoGroupOnSub(WitnessError):
    pass


class BadCoherentStructure(WitnessError):
    pass


# linear representations
class NotFunctorial(WitnessError):
    pass


class NotInvertible(WitnessError):
    pass


class DimMismatch(WitnessError):
    pass


class GroupoidMismatch(WitnessError):
    pass


class NonConstantRank(WitnessError):
    pass


# 2-representations
class NotClosedUnderFg(WitnessError):
    pass


class RepNotOfH(WitnessError):
    pass


class NotActionGroupoid(WitnessError):
    pass


class NotIntertwiner(WitnessError):
    pass


class NotTwoGroupAutomorphism(WitnessError):
    pass


# descent
class NotACover(WitnessError):
    pass


class NotARefinement(WitnessError):
    pass


class CocycleInvalid(WitnessError):
    pass


class LevelFail(WitnessError):
    pass


class HomomorphismInvalid(WitnessError):
    pass


# definition files
class ParseError(WitnessError):
    pass


class UnresolvedReference(WitnessError):
    pass


class DefinitionError(WitnessError):
    """A section failed its module validator; wraps the module-level witness."""


class UnknownAudit(WitnessError):
    pass
