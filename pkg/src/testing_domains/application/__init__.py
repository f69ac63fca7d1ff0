from .commands import (
    ReduceDomainCommand,
    TestingDomainCommandHandler,
    VerifyChainCommand,
)

__all__ = [
    # Commands
    "ReduceDomainCommand",
    "VerifyChainCommand",
    "TestingDomainCommandHandler",
]
