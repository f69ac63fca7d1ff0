from .dtos import ReduceDomainCommand, VerifyChainCommand
from .handlers import TestingDomainCommandHandler

__all__ = [
    "ReduceDomainCommand",
    "VerifyChainCommand",
    "TestingDomainCommandHandler",
]
