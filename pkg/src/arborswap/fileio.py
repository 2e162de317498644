"""JSON instance/sequence files and Graphviz DOT rendering."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence

import jsonschema

from .digraph import Digraph
from .reconfig import ReconfigSequence, ReconfigStep, StepKind

INSTANCE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["n", "root", "k", "arcs"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "root": {"type": ["integer", "null"], "minimum": 0},
        "k": {"type": "integer", "minimum": 1},
        "arcs": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "S": {"type": "array", "items": {"type": "integer", "minimum": 0}, "uniqueItems": True},
        "T": {"type": "array", "items": {"type": "integer", "minimum": 0}, "uniqueItems": True},
    },
}

SEQUENCE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["instance_digest", "steps", "length", "bound", "difference"],
    "additionalProperties": False,
    "properties": {
        "instance_digest": {"type": "string"},
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["remove", "add", "kind"],
                "additionalProperties": False,
                "properties": {
                    "remove": {"type": "integer", "minimum": 0},
                    "add": {"type": "integer", "minimum": 0},
                    "kind": {"enum": [k.value for k in StepKind]},
                },
            },
        },
        "length": {"type": "integer", "minimum": 0},
        "bound": {"type": "integer", "minimum": 0},
        "difference": {"type": "integer", "minimum": 0},
    },
}


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class InstanceFile:
    n: int
    root: Optional[int]
    k: int
    arcs: tuple[tuple[int, int], ...]
    S: Optional[frozenset[int]] = None
    T: Optional[frozenset[int]] = None

    @property
    def multiroot(self) -> bool:
        return self.root is None

    @property
    def digraph(self) -> Digraph:
        return Digraph.from_pairs(self.n, self.arcs, self.root)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "n": self.n,
            "root": self.root,
            "k": self.k,
            "arcs": [list(a) for a in self.arcs],
        }
        if self.S is not None:
            out["S"] = sorted(self.S)
        if self.T is not None:
            out["T"] = sorted(self.T)
        return out

    @classmethod
    def from_json(cls, data: Any) -> "InstanceFile":
        try:
            jsonschema.validate(data, INSTANCE_SCHEMA)
        except jsonschema.ValidationError as exc:
            raise FormatError(f"invalid instance: {exc.message}") from exc
        n, root, k = data["n"], data["root"], data["k"]
        arcs = tuple((t, h) for t, h in data["arcs"])
        if root is not None and root >= n:
            raise FormatError(f"root {root} outside [0, {n})")
        for i, (t, h) in enumerate(arcs):
            if t >= n or h >= n:
                raise FormatError(f"arc {i} = {[t, h]} references a vertex outside [0, {n})")
        sets = {}
        for name in ("S", "T"):
            if name in data:
                ids = frozenset(data[name])
                bad = sorted(a for a in ids if a >= len(arcs))
                if bad:
                    raise FormatError(f"{name} references unknown arcs {bad}")
                if root is not None and len(ids) != k * (n - 1):
                    raise FormatError(
                        f"{name} has {len(ids)} arcs, expected k(n-1) = {k * (n - 1)}"
                    )
                sets[name] = ids
        return cls(n, root, k, arcs, sets.get("S"), sets.get("T"))

    def digest(self) -> str:
        canon = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode()).hexdigest()

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "InstanceFile":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not JSON: {exc}") from exc
        return cls.from_json(data)

    @classmethod
    def load(cls, path: str | Path) -> "InstanceFile":
        return cls.loads(Path(path).read_text())


@dataclass(frozen=True)
class SequenceFile:
    instance_digest: str
    steps: tuple[ReconfigStep, ...]
    length: int
    bound: int
    difference: int
    trace: Optional[list[dict]] = field(default=None, compare=False)

    @classmethod
    def from_sequence(
        cls, instance: InstanceFile, seq: ReconfigSequence, bound: int
    ) -> "SequenceFile":
        assert instance.S is not None and instance.T is not None
        return cls(
            instance.digest(),
            tuple(seq.steps),
            len(seq),
            bound,
            len(instance.S - instance.T),
        )

    def to_sequence(self, start: frozenset[int]) -> ReconfigSequence:
        return ReconfigSequence(frozenset(start), list(self.steps), [None] * len(self.steps))

    def to_json(self) -> dict[str, Any]:
        return {
            "instance_digest": self.instance_digest,
            "steps": [{"remove": s.remove, "add": s.add, "kind": s.kind.value} for s in self.steps],
            "length": self.length,
            "bound": self.bound,
            "difference": self.difference,
        }

    @classmethod
    def from_json(cls, data: Any) -> "SequenceFile":
        try:
            jsonschema.validate(data, SEQUENCE_SCHEMA)
        except jsonschema.ValidationError as exc:
            raise FormatError(f"invalid sequence: {exc.message}") from exc
        steps = tuple(
            ReconfigStep(s["remove"], s["add"], StepKind(s["kind"])) for s in data["steps"]
        )
        if data["length"] != len(steps):
            raise FormatError(f"length {data['length']} disagrees with {len(steps)} steps")
        return cls(
            data["instance_digest"], steps, data["length"], data["bound"], data["difference"]
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "SequenceFile":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not JSON: {exc}") from exc
        return cls.from_json(data)


# Arc styles: kept (in both), leaving (current only), entering (target only), unused.
DOT_STYLES = {
    "both": 'color="black", penwidth=2.5',
    "current": 'color="red", penwidth=2.5',
    "target": 'color="blue", style="dashed"',
    "other": 'color="gray80"',
}


def dot_source(
    D: Digraph,
    current: frozenset[int],
    target: frozenset[int],
    title: str = "state",
    names: Optional[Sequence[str]] = None,
) -> str:
    label = (lambda v: names[v]) if names else str
    lines = [f'digraph "{title}" {{', f'  label="{title}";', "  node [shape=circle];"]
    for v in range(D.n):
        shape = ", shape=doublecircle" if v == D.root else ""
        lines.append(f'  v{v} [label="{label(v)}"{shape}];')
    for a in D.arcs:
        if a.id in current and a.id in target:
            style = DOT_STYLES["both"]
        elif a.id in current:
            style = DOT_STYLES["current"]
        elif a.id in target:
            style = DOT_STYLES["target"]
        else:
            style = DOT_STYLES["other"]
        lines.append(f'  v{a.tail} -> v{a.head} [label="{a.id}", {style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot_states(
    D: Digraph, seq: ReconfigSequence, target: frozenset[int], directory: str | Path
) -> list[Path]:
    """One ``state_<i>.dot`` per state of ``seq``."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, state in enumerate(seq.states()):
        path = out / f"state_{i}.dot"
        path.write_text(dot_source(D, state, target, f"state_{i}"))
        paths.append(path)
    return paths
