"""
Base Document Parser
Shared reading and writing of the versioned text formats: one header line,
then a JSON body validated by a pydantic document model
"""

import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Generic, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from ..common.exceptions import BlockIPError, InstanceParseError

DocumentModel = TypeVar("DocumentModel", bound=BaseModel)
Domain = TypeVar("Domain")
PathLike = Union[str, Path]


class BaseDocumentParser(ABC, Generic[DocumentModel, Domain]):
    """
    Base class for document parsers
    Subclasses name the header and model and map documents to domain objects
    """

    header: str
    model: Type[DocumentModel]

    @abstractmethod
    def to_domain(self, document: DocumentModel) -> Domain:
        """Build the domain object from a validated document"""
        pass

    @abstractmethod
    def to_body(self, value: Domain) -> Dict[str, Any]:
        """JSON body for a domain object"""
        pass

    def loads(self, text: str) -> Domain:
        """Parse a document; errors carry a line/column or a field path"""
        first, _, body = text.partition("\n")
        if first.strip() != self.header:
            raise InstanceParseError(
                f"expected header '{self.header}', found '{first.strip()}'", "line 1"
            )
        try:
            raw = json.loads(body)
        except json.JSONDecodeError as e:
            raise InstanceParseError(e.msg, f"line {e.lineno + 1}, column {e.colno}")

        try:
            document = self.model.model_validate(raw)
        except ValidationError as e:
            error = e.errors()[0]
            path = ".".join(str(p) for p in error["loc"]) or "body"
            raise InstanceParseError(error["msg"], path)

        try:
            return self.to_domain(document)
        except InstanceParseError:
            raise
        except (BlockIPError, ValueError, KeyError) as e:
            raise InstanceParseError(str(e), "body")

    def dumps(self, value: Domain) -> str:
        """Header line plus a deterministic JSON body"""
        body = json.dumps(self.to_body(value), indent=2, sort_keys=True)
        return f"{self.header}\n{body}\n"

    def read(self, path: PathLike) -> Domain:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise InstanceParseError(f"cannot read file: {e.strerror}", str(path))
        return self.loads(text)

    def write(self, value: Domain, path: PathLike) -> Path:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(self.dumps(value), encoding="utf-8")
        return target
