from dataclasses import dataclass, field
from typing import Any, Literal

from src.enums.enum import CommandStatusEnum


@dataclass
class CommandResult:
    status: Literal[CommandStatusEnum.FAILED, CommandStatusEnum.SUCCESS] = CommandStatusEnum.FAILED
    data: dict[str, Any] = field(default_factory=dict)
    error: str | None = None

    @property
    def exit_code(self) -> int:
        return 0 if self.status is CommandStatusEnum.SUCCESS else 1

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "data": self.data,
            "error": self.error,
        }
