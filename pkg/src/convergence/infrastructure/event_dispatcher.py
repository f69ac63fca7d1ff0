"""Event dispatcher for convergence events.

Query handlers publish a ``ConvergenceCertified`` event per certified seed.
"""

from collections import defaultdict
from typing import Callable

from convergence.domain.events import DomainEvent

EventHandler = Callable[[DomainEvent], None]


class EventDispatcher:
    """Dispatches convergence events to registered handlers.

    Example:
        dispatcher = EventDispatcher()
        dispatcher.subscribe(ConvergenceCertified, print_verdict)
        dispatcher.publish(ConvergenceCertified(seed="rb", verdict="converges"))
    """

    def __init__(self):
        self._handlers: dict[type[DomainEvent], list[EventHandler]] = defaultdict(
            list
        )

    def subscribe(self, event_type: type[DomainEvent], handler: EventHandler) -> None:
        self._handlers[event_type].append(handler)

    def unsubscribe(self, event_type: type[DomainEvent], handler: EventHandler) -> None:
        if handler in self._handlers[event_type]:
            self._handlers[event_type].remove(handler)

    def publish(self, event: DomainEvent) -> None:
        """Call every handler subscribed to the event's exact type, in order."""
        for handler in self._handlers[type(event)]:
            handler(event)

    def clear(self) -> None:
        self._handlers.clear()
