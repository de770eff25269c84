from dataclasses import dataclass, field

from ..const import REPORT_SCHEMA


def envelope(command: str, body: dict) -> dict:
    return {"schema": REPORT_SCHEMA, "command": command, **body}


class CommandData:
    """Common surface of the command reports.

    ``passed`` is False for a failed check, ``undecided`` marks a verdict
    the kernel could not settle.
    """

    command = ""

    @property
    def passed(self) -> bool:
        return True

    @property
    def undecided(self) -> bool:
        return False

    def lines(self) -> list[str]:
        raise NotImplementedError

    def toJSON(self):
        raise NotImplementedError


@dataclass
class CheckData(CommandData):
    kind: str
    checks: dict[str, bool]
    failing: str | None = None
    verified_up_to: int | None = None
    zero_differentials: list[str] = field(default_factory=list)
    properties: dict[str, bool] = field(default_factory=dict)

    command = "check"

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def lines(self) -> list[str]:
        result = [f"{self.kind} document"]
        for name, value in self.checks.items():
            result.append(f"{name}: {'passed' if value else 'FAILED'}")
        if self.verified_up_to is not None:
            result.append(f"verified up to n = {self.verified_up_to}")
        if self.failing is not None:
            result.append(f"first failure: {self.failing}")
        for name in self.zero_differentials:
            result.append(f"d({name}) expands to 0")
        for name, value in self.properties.items():
            result.append(f"{name}: {'yes' if value else 'no'}")
        return result

    def toJSON(self):
        return envelope(
            self.command,
            {
                "kind": self.kind,
                "passed": self.passed,
                "checks": self.checks,
                "failing": self.failing,
                "verified_up_to": self.verified_up_to,
                "zero_differentials": self.zero_differentials,
                "properties": self.properties,
            },
        )


@dataclass
class HomologyData(CommandData):
    degree: int
    dimension: int
    classes: dict[str, str]
    cycle_dimension: int
    boundary_rank: int

    command = "homology"

    def lines(self) -> list[str]:
        result = [f"H_{self.degree} has dimension {self.dimension}"]
        result += [f"{name}: {rep}" for name, rep in self.classes.items()]
        return result

    def toJSON(self):
        return envelope(
            self.command,
            {
                "degree": self.degree,
                "dimension": self.dimension,
                "classes": self.classes,
                "cycle_dimension": self.cycle_dimension,
                "boundary_rank": self.boundary_rank,
            },
        )


@dataclass
class ModelData(CommandData):
    dimensions: list[int]
    generators: list[tuple[str, int]]
    differential: dict[str, str]
    attaching_cycle: str
    cycle_degree: int
    attaching_terms: list[tuple[int, str, str]]
    d_squared: bool

    command = "whitehead-model"

    @property
    def passed(self) -> bool:
        return self.d_squared

    def lines(self) -> list[str]:
        result = [f"model of the fat wedge of spheres {self.dimensions}"]
        result += [f"|{name}| = {degree}" for name, degree in self.generators]
        result += [f"d({name}) = {value}" for name, value in self.differential.items()]
        result.append(f"w = {self.attaching_cycle} (degree {self.cycle_degree})")
        result.append(f"d^2 = 0: {'passed' if self.d_squared else 'FAILED'}")
        return result

    def toJSON(self):
        return envelope(
            self.command,
            {
                "dimensions": self.dimensions,
                "generators": [[name, degree] for name, degree in self.generators],
                "differential": self.differential,
                "attaching_cycle": self.attaching_cycle,
                "cycle_degree": self.cycle_degree,
                "attaching_terms": [
                    {"sign": sign, "left": left, "right": right}
                    for sign, left, right in self.attaching_terms
                ],
                "d_squared": self.d_squared,
            },
        )


@dataclass
class BracketSetData(CommandData):
    target: str
    degree: int
    empty: bool
    value: dict[str, str]
    parameters: list[str]
    free_parameters: list[str]
    constraints: list[str]
    cardinality: str
    zero_membership: str
    witnesses: list[dict] = field(default_factory=list)

    command = "bracket-set"

    @property
    def undecided(self) -> bool:
        return self.cardinality == "undecided" or self.zero_membership == "unknown"

    def lines(self) -> list[str]:
        if self.empty:
            return [f"bracket set in the {self.target}: empty (degree {self.degree})"]
        value = " + ".join(f"({v})*{k}" for k, v in self.value.items()) or "0"
        result = [
            f"bracket set in the {self.target}, degree {self.degree}: {value}",
            f"cardinality: {self.cardinality}, contains 0: {self.zero_membership}",
        ]
        if self.free_parameters:
            result.append(f"free parameters: {', '.join(self.free_parameters)}")
        result += [f"constraint: {c} = 0" for c in self.constraints]
        return result

    def toJSON(self):
        return envelope(
            self.command,
            {
                "target": self.target,
                "degree": self.degree,
                "empty": self.empty,
                "value": self.value,
                "parameters": self.parameters,
                "free_parameters": self.free_parameters,
                "constraints": self.constraints,
                "cardinality": self.cardinality,
                "zero_membership": self.zero_membership,
                "witnesses": self.witnesses,
            },
        )


@dataclass
class FormalityData(CommandData):
    verdict: str
    in_algebra: BracketSetData
    in_homology: BracketSetData

    command = "formality"

    @property
    def undecided(self) -> bool:
        return self.verdict == "undecided"

    def lines(self) -> list[str]:
        return [f"verdict: {self.verdict}"] + self.in_algebra.lines() + self.in_homology.lines()

    def toJSON(self):
        algebra = self.in_algebra.toJSON()
        homology = self.in_homology.toJSON()
        for report in (algebra, homology):
            del report["schema"], report["command"]
        return envelope(
            self.command,
            {"verdict": self.verdict, "in_algebra": algebra, "in_homology": homology},
        )


@dataclass
class SpectralSequenceData(CommandData):
    page: int
    certified_degree: int
    dimensions: dict[str, int]
    collapses: bool
    checked_pages: list[int]
    counterexample: dict | None = None

    command = "ss"

    @property
    def passed(self) -> bool:
        return self.collapses

    def lines(self) -> list[str]:
        result = [f"E^{self.page} through degree {self.certified_degree}"]
        result += [f"  (p, n) = ({key}): {dim}" for key, dim in self.dimensions.items()]
        if self.collapses:
            result.append(
                f"d^k = 0 for k >= {self.page} through degree {self.certified_degree}"
            )
        else:
            c = self.counterexample
            result.append(
                f"d^{c['page']} is nonzero on filtration {c['filtration']}, degree {c['degree']}"
            )
        return result

    def toJSON(self):
        return envelope(
            self.command,
            {
                "page": self.page,
                "certified_degree": self.certified_degree,
                "dimensions": self.dimensions,
                "collapses": self.collapses,
                "checked_pages": self.checked_pages,
                "counterexample": self.counterexample,
            },
        )


@dataclass
class DualizeData(CommandData):
    source_kind: str
    document: dict
    checks: dict[str, bool]
    properties: dict[str, object] = field(default_factory=dict)

    command = "dualize"

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def lines(self) -> list[str]:
        result = [f"dual of the {self.source_kind} document: {self.document['kind']}"]
        for name, value in self.document.get("differential", {}).items():
            result.append(f"d({name}) = {value}")
        for arity, table in self.document.get("brackets", {}).items():
            for args, value in table.items():
                result.append(f"l_{arity}({args}) = {value}")
        result += [f"{k}: {'passed' if v else 'FAILED'}" for k, v in self.checks.items()]
        result += [f"{k}: {v}" for k, v in self.properties.items()]
        return result

    def toJSON(self):
        return envelope(
            self.command,
            {
                "source_kind": self.source_kind,
                "document": self.document,
                "checks": self.checks,
                "properties": self.properties,
            },
        )


@dataclass
class GradedDetData(CommandData):
    degrees: list[int]
    value: str | int
    expansion_value: str | int

    command = "graded-det"

    @property
    def passed(self) -> bool:
        return self.value == self.expansion_value

    def lines(self) -> list[str]:
        return [
            f"graded determinant for degrees {self.degrees}: {self.value}",
            f"coefficient extraction: {self.expansion_value}",
        ]

    def toJSON(self):
        return envelope(
            self.command,
            {
                "degrees": self.degrees,
                "value": self.value,
                "expansion_value": self.expansion_value,
                "passed": self.passed,
            },
        )


@dataclass
class AndrewsArkowitzData(CommandData):
    generator: str
    classes: list[str]
    member: str
    values: dict[str, str | int]
    holds: bool
    signs_agree: bool
    precondition_met: bool

    command = "graded-det"

    @property
    def passed(self) -> bool:
        return self.holds

    def lines(self) -> list[str]:
        result = [f"<{self.generator} ; {k}> side: {v}" for k, v in self.values.items()]
        result.append(f"equality holds: {self.holds}")
        result.append(f"bracket and determinant forms agree: {self.signs_agree}")
        if not self.precondition_met:
            result.append(f"d({self.generator}) has shorter words; compared anyway")
        return result

    def toJSON(self):
        return envelope(
            self.command,
            {
                "generator": self.generator,
                "classes": self.classes,
                "member": self.member,
                "values": self.values,
                "holds": self.holds,
                "signs_agree": self.signs_agree,
                "precondition_met": self.precondition_met,
            },
        )


@dataclass
class IntrinsicCoformalData(CommandData):
    dimensions: list[int]
    eilenberg_mac_lane: bool
    coformal: bool
    witness: str | None = None

    command = "intrinsic-coformal"

    def lines(self) -> list[str]:
        if self.coformal:
            return ["YES"]
        return [f"NO, witness {self.witness}"]

    def toJSON(self):
        return envelope(
            self.command,
            {
                "dimensions": self.dimensions,
                "eilenberg_mac_lane": self.eilenberg_mac_lane,
                "coformal": self.coformal,
                "witness": self.witness,
            },
        )


@dataclass
class ExamplesData(CommandData):
    criteria: list[dict]

    command = "examples"

    @property
    def passed(self) -> bool:
        return all(criterion["passed"] for criterion in self.criteria)

    def lines(self) -> list[str]:
        result = []
        for criterion in self.criteria:
            status = "ok" if criterion["passed"] else "FAILED"
            result.append(f"[{status}] {criterion['number']}. {criterion['title']}")
            result += [f"    {detail}" for detail in criterion["details"]]
        return result

    def toJSON(self):
        return envelope(self.command, {"passed": self.passed, "criteria": self.criteria})
