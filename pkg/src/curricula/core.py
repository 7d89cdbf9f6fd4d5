"""Four-tier curriculum hierarchy: goals, skills, topics, educational packages.

All child lists are ordered edge lists with per-edge vote tallies.  After a
component is created, its children may only change through
:meth:`CurriculumStore.apply_accepted_edit`; every child-list mutation is
recorded in an audit trail carrying the suggestion id that caused it (or
``"creation"`` for the initial list).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from urllib.parse import urlparse

from .errors import (
    DuplicateChildInList,
    DuplicateSkillInList,
    DuplicateSkillTitle,
    DuplicateTopicTitle,
    EmptyResourceList,
    EmptyTitle,
    InvalidResource,
    StaleEdit,
    UnknownChild,
    UnknownComponent,
    UnknownEdge,
    UnknownSkill,
    UnknownTopic,
)

GENERAL = "General"

FORMAT_TYPES = ("video", "text", "audio", "mixed")
DETAIL_LEVELS = ("overview", "standard", "deep")


def canonical_title(title: str) -> str:
    """Case-fold, trim, and collapse internal whitespace."""
    return " ".join(title.casefold().split())


def _require_title(title: str) -> str:
    title = title.strip()
    if not title:
        raise EmptyTitle("title must be nonempty")
    return title


@dataclass(frozen=True)
class GoalContext:
    """Contextualisation of a learning goal; each field is either the
    ``General`` sentinel or a nonempty string."""

    industry: str = GENERAL
    company: str = GENERAL
    city: str = GENERAL
    country: str = GENERAL

    def __post_init__(self):
        for name in ("industry", "company", "city", "country"):
            value = getattr(self, name)
            if value != GENERAL:
                trimmed = value.strip()
                if not trimmed:
                    raise EmptyTitle(f"context field {name!r} must be {GENERAL!r} or nonempty")
                object.__setattr__(self, name, trimmed)

    def to_dict(self) -> dict:
        return {
            "industry": self.industry,
            "company": self.company,
            "city": self.city,
            "country": self.country,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GoalContext":
        return cls(**{k: d.get(k, GENERAL) for k in ("industry", "company", "city", "country")})


@dataclass
class VoteTally:
    ups: int = 0
    downs: int = 0
    voters: dict[str, str] = field(default_factory=dict)  # contributor -> "up"|"down"

    def set_vote(self, voter: str, direction: str) -> str | None:
        """Record/overwrite a vote; returns the voter's previous direction."""
        if direction not in ("up", "down"):
            raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
        previous = self.voters.get(voter)
        self.voters[voter] = direction
        self.ups = sum(1 for d in self.voters.values() if d == "up")
        self.downs = sum(1 for d in self.voters.values() if d == "down")
        return previous

    @property
    def importance(self) -> int:
        return self.ups - self.downs

    def to_dict(self) -> dict:
        return {"ups": self.ups, "downs": self.downs, "voters": dict(self.voters)}

    @classmethod
    def from_dict(cls, d: dict) -> "VoteTally":
        return cls(ups=d["ups"], downs=d["downs"], voters=dict(d["voters"]))


@dataclass
class EdgeRef:
    child_id: str
    position: int
    tally: VoteTally = field(default_factory=VoteTally)

    def to_dict(self) -> dict:
        return {"child_id": self.child_id, "position": self.position, "tally": self.tally.to_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> "EdgeRef":
        return cls(child_id=d["child_id"], position=d["position"], tally=VoteTally.from_dict(d["tally"]))


@dataclass
class Goal:
    id: str
    title: str
    description: str | None
    context: GoalContext
    skills: list[EdgeRef]
    created_by: str
    created_at: str  # ISO-8601 UTC


@dataclass
class Skill:
    id: str
    title: str
    description: str | None
    taxonomy_uri: str | None
    topics: list[EdgeRef]
    created_by: str
    created_at: str


@dataclass
class Topic:
    id: str
    title: str
    description: str | None
    packages: list[EdgeRef]
    created_by: str
    created_at: str


@dataclass
class EducationalResource:
    """A single piece of learning content inside a package."""

    origin_kind: str  # "url" | "upload"
    origin_ref: str   # URL, or content digest for uploads
    title: str
    description: str = ""
    format_type: str = "video"
    estimated_minutes: int = 0
    source: str = ""
    has_example: bool = False
    has_theory: bool = False
    detail_level: str = "standard"
    is_class_recording: bool = False

    def __post_init__(self):
        if self.origin_kind not in ("url", "upload"):
            raise InvalidResource(f"origin_kind must be 'url' or 'upload', got {self.origin_kind!r}")
        if self.origin_kind == "url":
            parsed = urlparse(self.origin_ref)
            if not (parsed.scheme and parsed.netloc):
                raise InvalidResource(f"not a valid URL: {self.origin_ref!r}")
        if self.format_type not in FORMAT_TYPES:
            raise InvalidResource(f"format_type must be one of {FORMAT_TYPES}")
        if self.detail_level not in DETAIL_LEVELS:
            raise InvalidResource(f"detail_level must be one of {DETAIL_LEVELS}")
        if self.estimated_minutes < 0:
            raise InvalidResource("estimated_minutes must be >= 0")

    def to_dict(self) -> dict:
        return {
            "origin_kind": self.origin_kind,
            "origin_ref": self.origin_ref,
            "title": self.title,
            "description": self.description,
            "format_type": self.format_type,
            "estimated_minutes": self.estimated_minutes,
            "source": self.source,
            "has_example": self.has_example,
            "has_theory": self.has_theory,
            "detail_level": self.detail_level,
            "is_class_recording": self.is_class_recording,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EducationalResource":
        return cls(**d)


@dataclass
class EducationalPackage:
    id: str
    title: str
    description: str | None
    resources: list[EducationalResource]
    covered_topics: list[str]  # topic ids, sorted
    created_by: str
    created_at: str


# --- crowd-editable child edits ----------------------------------------------

@dataclass(frozen=True)
class AddChild:
    child_id: str

    kind = "add_child"

    def to_dict(self) -> dict:
        return {"type": self.kind, "child_id": self.child_id}


@dataclass(frozen=True)
class DeleteChild:
    child_id: str

    kind = "delete_child"

    def to_dict(self) -> dict:
        return {"type": self.kind, "child_id": self.child_id}


@dataclass(frozen=True)
class ReorderChildren:
    order: tuple[str, ...]

    kind = "reorder_children"

    def to_dict(self) -> dict:
        return {"type": self.kind, "order": list(self.order)}


Edit = AddChild | DeleteChild | ReorderChildren


def edit_from_dict(d: dict) -> Edit:
    t = d.get("type")
    if t == "add_child":
        return AddChild(d["child_id"])
    if t == "delete_child":
        return DeleteChild(d["child_id"])
    if t == "reorder_children":
        return ReorderChildren(tuple(d["order"]))
    raise ValueError(f"unknown edit type {t!r}")


@dataclass(frozen=True)
class ChildChange:
    """Audit entry: one child-list mutation and what caused it."""

    parent_id: str
    change: str          # "add" | "delete" | "reorder" | "init"
    child_ids: tuple[str, ...]
    cause: str           # suggestion id, or "creation"


@dataclass
class ChildView:
    child_id: str
    title: str
    position: int
    ups: int
    downs: int

    @property
    def importance(self) -> int:
        return self.ups - self.downs


@dataclass
class PageView:
    kind: str  # "goal" | "skill" | "topic"
    component: Goal | Skill | Topic
    children: list[ChildView]
    reverse_links: list[tuple[str, str, str]]  # (kind, id, title)
    open_suggestions: list = field(default_factory=list)


class CurriculumStore:
    """In-memory store for the curriculum hierarchy.

    Mutations are not thread-safe on their own; the service layer serializes
    them through a single writer.  Reads return live objects; callers that
    need isolation snapshot via :meth:`to_dict`.
    """

    def __init__(self):
        self.goals: dict[str, Goal] = {}
        self.skills: dict[str, Skill] = {}
        self.topics: dict[str, Topic] = {}
        self.packages: dict[str, EducationalPackage] = {}
        self.child_changes: list[ChildChange] = []
        self._counters = {"goal": 0, "skill": 0, "topic": 0, "package": 0}
        self._skill_titles: dict[str, str] = {}  # canonical title -> skill id
        self._topic_titles: dict[str, str] = {}

    # -- id management ---------------------------------------------------

    def next_id(self, kind: str) -> str:
        self._counters[kind] += 1
        return f"{kind}-{self._counters[kind]}"

    def _claim_id(self, kind: str, component_id: str) -> None:
        """Register an externally assigned id (event replay) with the counter."""
        prefix = f"{kind}-"
        if component_id.startswith(prefix):
            try:
                n = int(component_id[len(prefix):])
            except ValueError:
                return
            self._counters[kind] = max(self._counters[kind], n)

    # -- creation ----------------------------------------------------------

    def add_goal(
        self,
        title: str,
        description: str | None,
        context: GoalContext,
        initial_skills: list[str],
        author: str,
        created_at: str,
        goal_id: str | None = None,
    ) -> Goal:
        title = _require_title(title)
        seen: set[str] = set()
        for sid in initial_skills:
            if sid not in self.skills:
                raise UnknownSkill(sid)
            if sid in seen:
                raise DuplicateSkillInList(sid)
            seen.add(sid)
        goal_id = goal_id or self.next_id("goal")
        self._claim_id("goal", goal_id)
        goal = Goal(
            id=goal_id,
            title=title,
            description=description,
            context=context,
            skills=[EdgeRef(sid, pos) for pos, sid in enumerate(initial_skills)],
            created_by=author,
            created_at=created_at,
        )
        self.goals[goal_id] = goal
        self.child_changes.append(
            ChildChange(goal_id, "init", tuple(initial_skills), "creation")
        )
        return goal

    def add_skill(
        self,
        title: str,
        description: str | None,
        initial_topics: list[str],
        author: str,
        created_at: str,
        skill_id: str | None = None,
        taxonomy_uri: str | None = None,
    ) -> Skill:
        title = _require_title(title)
        canon = canonical_title(title)
        if canon in self._skill_titles:
            raise DuplicateSkillTitle(title)
        seen: set[str] = set()
        for tid in initial_topics:
            if tid not in self.topics:
                raise UnknownTopic(tid)
            if tid in seen:
                raise DuplicateChildInList(tid)
            seen.add(tid)
        skill_id = skill_id or self.next_id("skill")
        self._claim_id("skill", skill_id)
        skill = Skill(
            id=skill_id,
            title=title,
            description=description,
            taxonomy_uri=taxonomy_uri,
            topics=[EdgeRef(tid, pos) for pos, tid in enumerate(initial_topics)],
            created_by=author,
            created_at=created_at,
        )
        self.skills[skill_id] = skill
        self._skill_titles[canon] = skill_id
        self.child_changes.append(
            ChildChange(skill_id, "init", tuple(initial_topics), "creation")
        )
        return skill

    def add_topic(
        self,
        title: str,
        description: str | None,
        author: str,
        created_at: str,
        topic_id: str | None = None,
    ) -> Topic:
        title = _require_title(title)
        canon = canonical_title(title)
        if canon in self._topic_titles:
            raise DuplicateTopicTitle(title)
        topic_id = topic_id or self.next_id("topic")
        self._claim_id("topic", topic_id)
        topic = Topic(
            id=topic_id,
            title=title,
            description=description,
            packages=[],
            created_by=author,
            created_at=created_at,
        )
        self.topics[topic_id] = topic
        self._topic_titles[canon] = topic_id
        self.child_changes.append(ChildChange(topic_id, "init", (), "creation"))
        return topic

    def add_package(
        self,
        title: str,
        description: str | None,
        resources: list[EducationalResource],
        covered_topics: list[str],
        author: str,
        created_at: str,
        package_id: str | None = None,
    ) -> EducationalPackage:
        title = _require_title(title)
        if not resources:
            raise EmptyResourceList("a package needs at least one resource")
        for tid in covered_topics:
            if tid not in self.topics:
                raise UnknownTopic(tid)
        package_id = package_id or self.next_id("package")
        self._claim_id("package", package_id)
        package = EducationalPackage(
            id=package_id,
            title=title,
            description=description,
            resources=list(resources),
            covered_topics=sorted(set(covered_topics)),
            created_by=author,
            created_at=created_at,
        )
        self.packages[package_id] = package
        for tid in package.covered_topics:
            topic = self.topics[tid]
            topic.packages.append(EdgeRef(package_id, len(topic.packages)))
            self.child_changes.append(
                ChildChange(tid, "add", (package_id,), "creation")
            )
        return package

    # -- lookups -----------------------------------------------------------

    def find_component(self, component_id: str):
        """Return ("goal"|"skill"|"topic"|"package", component) or raise."""
        for kind, table in (
            ("goal", self.goals),
            ("skill", self.skills),
            ("topic", self.topics),
            ("package", self.packages),
        ):
            if component_id in table:
                return kind, table[component_id]
        raise UnknownComponent(component_id)

    def children_of(self, parent_id: str) -> list[EdgeRef]:
        kind, component = self.find_component(parent_id)
        if kind == "goal":
            return component.skills
        if kind == "skill":
            return component.topics
        if kind == "topic":
            return component.packages
        raise UnknownComponent(f"{parent_id} has no child list")

    def child_title(self, child_id: str) -> str:
        _, component = self.find_component(child_id)
        return component.title

    def edge(self, parent_id: str, child_id: str) -> EdgeRef:
        try:
            edges = self.children_of(parent_id)
        except UnknownComponent:
            raise UnknownEdge(f"{parent_id} -> {child_id}")
        for e in edges:
            if e.child_id == child_id:
                return e
        raise UnknownEdge(f"{parent_id} -> {child_id}")

    def skill_by_title(self, title: str) -> Skill | None:
        sid = self._skill_titles.get(canonical_title(title))
        return self.skills.get(sid) if sid else None

    def topic_by_title(self, title: str) -> Topic | None:
        tid = self._topic_titles.get(canonical_title(title))
        return self.topics.get(tid) if tid else None

    # -- pages ---------------------------------------------------------------

    def get_page(self, component_id: str) -> PageView:
        kind, component = self.find_component(component_id)
        if kind == "package":
            raise UnknownComponent(f"{component_id} has no page view")
        children = [
            ChildView(
                child_id=e.child_id,
                title=self.child_title(e.child_id),
                position=e.position,
                ups=e.tally.ups,
                downs=e.tally.downs,
            )
            for e in sorted(self.children_of(component_id), key=lambda e: e.position)
        ]
        reverse: list[tuple[str, str, str]] = []
        if kind == "skill":
            for goal in self.goals.values():
                if any(e.child_id == component_id for e in goal.skills):
                    reverse.append(("goal", goal.id, goal.title))
        elif kind == "topic":
            for skill in self.skills.values():
                if any(e.child_id == component_id for e in skill.topics):
                    reverse.append(("skill", skill.id, skill.title))
        reverse.sort(key=lambda t: t[1])
        return PageView(kind=kind, component=component, children=children, reverse_links=reverse)

    # -- crowd-approved edits -------------------------------------------------

    def valid_child(self, parent_id: str, child_id: str) -> bool:
        kind, _ = self.find_component(parent_id)
        table = {"goal": self.skills, "skill": self.topics, "topic": self.packages}.get(kind)
        return table is not None and child_id in table

    def apply_accepted_edit(self, parent_id: str, edit: Edit, suggestion_id: str):
        """Apply an accepted add/delete/reorder suggestion to a parent.

        Raises StaleEdit when the child set no longer matches the edit,
        UnknownChild when an added child does not exist at all.
        """
        edges = self.children_of(parent_id)
        current = [e.child_id for e in edges]
        if isinstance(edit, AddChild):
            if not self.valid_child(parent_id, edit.child_id):
                raise UnknownChild(edit.child_id)
            if edit.child_id in current:
                raise StaleEdit(f"{edit.child_id} already a child of {parent_id}")
            edges.append(EdgeRef(edit.child_id, len(edges)))
            self.child_changes.append(
                ChildChange(parent_id, "add", (edit.child_id,), suggestion_id)
            )
        elif isinstance(edit, DeleteChild):
            if edit.child_id not in current:
                raise StaleEdit(f"{edit.child_id} not a child of {parent_id}")
            edges[:] = [e for e in edges if e.child_id != edit.child_id]
            for pos, e in enumerate(edges):
                e.position = pos
            self.child_changes.append(
                ChildChange(parent_id, "delete", (edit.child_id,), suggestion_id)
            )
        elif isinstance(edit, ReorderChildren):
            if sorted(edit.order) != sorted(current) or len(set(edit.order)) != len(edit.order):
                raise StaleEdit(f"order is not a permutation of {parent_id}'s children")
            by_id = {e.child_id: e for e in edges}
            edges[:] = [by_id[cid] for cid in edit.order]
            for pos, e in enumerate(edges):
                e.position = pos
            self.child_changes.append(
                ChildChange(parent_id, "reorder", tuple(edit.order), suggestion_id)
            )
        else:
            raise ValueError(f"unknown edit {edit!r}")
        _, parent = self.find_component(parent_id)
        return parent

    # -- snapshots -------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "counters": dict(self._counters),
            "goals": {
                g.id: {
                    "id": g.id,
                    "title": g.title,
                    "description": g.description,
                    "context": g.context.to_dict(),
                    "skills": [e.to_dict() for e in g.skills],
                    "created_by": g.created_by,
                    "created_at": g.created_at,
                }
                for g in self.goals.values()
            },
            "skills": {
                s.id: {
                    "id": s.id,
                    "title": s.title,
                    "description": s.description,
                    "taxonomy_uri": s.taxonomy_uri,
                    "topics": [e.to_dict() for e in s.topics],
                    "created_by": s.created_by,
                    "created_at": s.created_at,
                }
                for s in self.skills.values()
            },
            "topics": {
                t.id: {
                    "id": t.id,
                    "title": t.title,
                    "description": t.description,
                    "packages": [e.to_dict() for e in t.packages],
                    "created_by": t.created_by,
                    "created_at": t.created_at,
                }
                for t in self.topics.values()
            },
            "packages": {
                p.id: {
                    "id": p.id,
                    "title": p.title,
                    "description": p.description,
                    "resources": [r.to_dict() for r in p.resources],
                    "covered_topics": list(p.covered_topics),
                    "created_by": p.created_by,
                    "created_at": p.created_at,
                }
                for p in self.packages.values()
            },
            "child_changes": [
                {
                    "parent_id": c.parent_id,
                    "change": c.change,
                    "child_ids": list(c.child_ids),
                    "cause": c.cause,
                }
                for c in self.child_changes
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CurriculumStore":
        store = cls()
        store._counters.update(d["counters"])
        for g in d["goals"].values():
            goal = Goal(
                id=g["id"],
                title=g["title"],
                description=g["description"],
                context=GoalContext.from_dict(g["context"]),
                skills=[EdgeRef.from_dict(e) for e in g["skills"]],
                created_by=g["created_by"],
                created_at=g["created_at"],
            )
            store.goals[goal.id] = goal
        for s in d["skills"].values():
            skill = Skill(
                id=s["id"],
                title=s["title"],
                description=s["description"],
                taxonomy_uri=s["taxonomy_uri"],
                topics=[EdgeRef.from_dict(e) for e in s["topics"]],
                created_by=s["created_by"],
                created_at=s["created_at"],
            )
            store.skills[skill.id] = skill
            store._skill_titles[canonical_title(skill.title)] = skill.id
        for t in d["topics"].values():
            topic = Topic(
                id=t["id"],
                title=t["title"],
                description=t["description"],
                packages=[EdgeRef.from_dict(e) for e in t["packages"]],
                created_by=t["created_by"],
                created_at=t["created_at"],
            )
            store.topics[topic.id] = topic
            store._topic_titles[canonical_title(topic.title)] = topic.id
        for p in d["packages"].values():
            package = EducationalPackage(
                id=p["id"],
                title=p["title"],
                description=p["description"],
                resources=[EducationalResource.from_dict(r) for r in p["resources"]],
                covered_topics=list(p["covered_topics"]),
                created_by=p["created_by"],
                created_at=p["created_at"],
            )
            store.packages[package.id] = package
        for c in d["child_changes"]:
            store.child_changes.append(
                ChildChange(c["parent_id"], c["change"], tuple(c["child_ids"]), c["cause"])
            )
        return store
