from dataclasses import dataclass, field

from ..enums import DocumentKind

Arguments = tuple[str, ...]


@dataclass
class PresentationDocument:
    """Validated presentation file with canonically rendered expressions."""

    kind: DocumentKind
    generators: list[tuple[str, int]]
    differential: dict[str, str] = field(default_factory=dict)
    brackets: dict[int, dict[Arguments, str]] = field(default_factory=dict)
    truncation: int | None = None
    order: list[str] | None = None
    options: dict = field(default_factory=dict)

    @property
    def degrees(self) -> dict[str, int]:
        return dict(self.generators)

    def toJSON(self):
        data = {
            "kind": self.kind.value,
            "generators": [[name, degree] for name, degree in self.generators],
        }
        if self.kind in (DocumentKind.DGL, DocumentKind.CDGA):
            data["differential"] = dict(self.differential)
        if self.kind == DocumentKind.LINF:
            data["brackets"] = {
                str(arity): {",".join(args): value for args, value in table.items()}
                for arity, table in sorted(self.brackets.items())
            }
        if self.truncation is not None:
            data["truncation"] = self.truncation
        if self.order is not None:
            data["order"] = list(self.order)
        if self.options:
            data["options"] = dict(sorted(self.options.items()))
        return data
