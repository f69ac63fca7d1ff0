"""Domain events for the testing-domain bounded context.

Events record the steps of a domain reduction so front ends can print the
size ledger while the reduction runs.
"""

from dataclasses import dataclass, field
from datetime import datetime
from uuid import UUID, uuid4


@dataclass(frozen=True)
class DomainEvent:
    """Base class for all domain events.

    Attributes:
        event_id: Unique identifier for this event instance.
        occurred_at: Timestamp when the event occurred.
    """

    event_id: UUID = field(default_factory=uuid4)
    occurred_at: datetime = field(default_factory=datetime.utcnow)

    @property
    def event_type(self) -> str:
        """Return the event type name."""
        return self.__class__.__name__


@dataclass(frozen=True)
class DomainReduced(DomainEvent):
    """Event raised when a removal move is certified.

    Attributes:
        previous_size: Size of the domain before the move.
        new_size: Size of the certified smaller domain.
        move: Description of the removed points.
    """

    previous_size: int = 0
    new_size: int = 0
    move: str = ""


@dataclass(frozen=True)
class DomainCertified(DomainEvent):
    """Event raised when a reduction finishes with a certified domain.

    Attributes:
        size: Size of the final domain.
        level: The level ``N₀`` used for every certificate in the chain.
    """

    size: int = 0
    level: int = 1
