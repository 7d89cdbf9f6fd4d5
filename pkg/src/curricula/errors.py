"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` (the class name)
so the HTTP layer and the CLI can surface it without string matching.
"""


class CurriculaError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# --- curriculum hierarchy ---------------------------------------------------

class EmptyTitle(CurriculaError):
    pass


class UnknownComponent(CurriculaError):
    pass


class UnknownSkill(UnknownComponent):
    pass


class UnknownTopic(UnknownComponent):
    pass


class UnknownPackage(UnknownComponent):
    pass


class UnknownParent(UnknownComponent):
    pass


class UnknownChild(CurriculaError):
    pass


class UnknownEdge(CurriculaError):
    pass


class DuplicateChildInList(CurriculaError):
    pass


class DuplicateSkillInList(DuplicateChildInList):
    pass


class DuplicateSkillTitle(CurriculaError):
    pass


class DuplicateTopicTitle(CurriculaError):
    pass


class EmptyResourceList(CurriculaError):
    pass


class InvalidResource(CurriculaError):
    pass


class StaleEdit(CurriculaError):
    pass


# --- text engine ------------------------------------------------------------

class EmptyCorpus(CurriculaError):
    pass


class InvalidK(CurriculaError):
    pass


class InvalidRange(CurriculaError):
    pass


class UnlabeledDocument(CurriculaError):
    pass


class EmptyTopWords(CurriculaError):
    pass


class IndexOutOfRange(CurriculaError):
    pass


# --- taxonomy matching ------------------------------------------------------

class MalformedRow(CurriculaError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class DanglingLink(CurriculaError):
    pass


class EmptyTaxonomy(CurriculaError):
    pass


# --- recommendation pipelines -----------------------------------------------

class ProviderEmpty(CurriculaError):
    pass


class ProviderUnavailable(CurriculaError):
    pass


class MissingFeature(CurriculaError):
    pass


class UnknownLabel(CurriculaError):
    pass


class EmptyTokenList(CurriculaError):
    pass


# --- crowd engine -----------------------------------------------------------

class SelfAdoption(CurriculaError):
    pass


class UnknownSuggestion(CurriculaError):
    pass


class DuplicateOpenSuggestion(CurriculaError):
    pass


class InvalidPayload(CurriculaError):
    pass


class AlreadyVoted(CurriculaError):
    pass


class SuggestionClosed(CurriculaError):
    pass


class InsufficientPoints(CurriculaError):
    pass


class SelfVote(CurriculaError):
    pass


# --- gateway ----------------------------------------------------------------

class CorruptLog(CurriculaError):
    def __init__(self, message: str, seq: int | None = None):
        super().__init__(message if seq is None else f"record {seq}: {message}")
        self.seq = seq


class ConfigError(CurriculaError):
    pass
