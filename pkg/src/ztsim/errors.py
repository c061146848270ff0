"""Exception hierarchy shared across the package."""


class ZtsimError(Exception):
    """Base class for all package errors."""


class ValidationError(ZtsimError):
    """A value or model failed a structural check at construction or call time."""


class ZeroProbabilityObservation(ZtsimError):
    """The observed (action, evidence) pair has zero likelihood under every
    type with positive prior mass. Signals model misspecification; never
    silently reset."""

    def __init__(self, action, evidence, tick=None, entity_id=None, index=None):
        self.action = action
        self.evidence = evidence
        self.tick = tick
        self.entity_id = entity_id
        self.index = index
        where = []
        if entity_id is not None:
            where.append(f"entity={entity_id!r}")
        if tick is not None:
            where.append(f"tick={tick}")
        if index is not None:
            where.append(f"observation index={index}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(
            f"zero-probability observation (action={action!r}, evidence={evidence!r}){suffix}"
        )


class NoPriorSources(ZtsimError):
    """Prior composition was given no usable sources."""


class UnreachableType(ZtsimError):
    """A Bayesian-game type with zero marginal probability was conditioned on."""


class EnumerationBudgetExceeded(ZtsimError):
    """A solver's pure-strategy enumeration would exceed the configured budget."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration budget exceeded: {required} profiles > budget {budget}"
        )


class ScenarioFormatError(ValidationError):
    """Scenario or game-spec document failed to parse or validate.

    Every diagnostic names the section and key of the first failure."""

    def __init__(self, section, key, reason):
        self.section = section
        self.key = key
        self.reason = reason
        super().__init__(f"[{section}] {key}: {reason}")


class TraceWriteError(ZtsimError):
    """Trace sink failed mid-stream; `written` holds the partial record count."""

    def __init__(self, written, cause):
        self.written = written
        self.cause = cause
        super().__init__(f"trace sink failed after {written} records: {cause}")
