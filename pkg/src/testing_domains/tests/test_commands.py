from django.test import SimpleTestCase

from lattices.domain import ZdBlockLattice
from testing_domains.application import (
    ReduceDomainCommand,
    TestingDomainCommandHandler,
    VerifyChainCommand,
)
from testing_domains.domain import (
    DomainCertified,
    DomainReduced,
    DomainSizeBoundError,
    VerificationFailed,
)
from testing_domains.infrastructure import EventDispatcher
from testing_domains.interfaces import format_ledger, serialize_reduction

INTERVAL = ((-3,), (-2,), (-1,), (0,))


class EventDispatcherTest(SimpleTestCase):
    def setUp(self):
        self.dispatcher = EventDispatcher()
        self.received_events = []

    def test_subscribe_and_publish(self):
        self.dispatcher.subscribe(DomainReduced, self.received_events.append)
        event = DomainReduced(previous_size=256, new_size=52, move="chain")

        self.dispatcher.publish(event)

        self.assertEqual(self.received_events, [event])

    def test_unsubscribe(self):
        self.dispatcher.subscribe(DomainReduced, self.received_events.append)
        self.dispatcher.unsubscribe(DomainReduced, self.received_events.append)

        self.dispatcher.publish(DomainReduced())

        self.assertEqual(self.received_events, [])

    def test_clear(self):
        self.dispatcher.subscribe(DomainCertified, self.received_events.append)
        self.dispatcher.clear()

        self.dispatcher.publish(DomainCertified(size=4))

        self.assertEqual(self.received_events, [])

    def test_dispatchers_are_independent(self):
        other = EventDispatcher()
        self.dispatcher.subscribe(DomainCertified, self.received_events.append)

        other.publish(DomainCertified(size=4))

        self.assertEqual(self.received_events, [])

    def test_event_type(self):
        self.assertEqual(DomainReduced().event_type, "DomainReduced")


class TestingDomainCommandHandlerTest(SimpleTestCase):
    def setUp(self):
        self.dispatcher = EventDispatcher()
        self.handler = TestingDomainCommandHandler(self.dispatcher)
        self.reduced = []
        self.certified = []
        self.dispatcher.subscribe(DomainReduced, self.reduced.append)
        self.dispatcher.subscribe(DomainCertified, self.certified.append)

    def test_reduce_publishes_ledger(self):
        command = ReduceDomainCommand(model=ZdBlockLattice((2,)), domain=INTERVAL)

        result = self.handler.handle_reduce(command)

        self.assertEqual(
            [(e.previous_size, e.new_size) for e in self.reduced], [(4, 3), (3, 2)]
        )
        self.assertEqual(self.certified[0].size, 2)
        self.assertEqual(format_ledger(result.ledger), "4 → 3 → 2")

    def test_reduce_defaults_to_canonical_domain(self):
        command = ReduceDomainCommand(model=ZdBlockLattice((2, 2)))

        result = self.handler.handle_reduce(command)

        self.assertEqual(len(result.domain), 4)
        self.assertEqual(self.reduced, [])

    def test_reduce_enforces_size_bound(self):
        command = ReduceDomainCommand(
            model=ZdBlockLattice((2,)), domain=INTERVAL, max_size=1
        )

        with self.assertRaises(DomainSizeBoundError) as caught:
            self.handler.handle_reduce(command)

        self.assertEqual(caught.exception.smallest, 2)

    def test_verify_chain(self):
        command = VerifyChainCommand(
            model=ZdBlockLattice((2,)),
            domains=(INTERVAL, INTERVAL[1:], INTERVAL[2:]),
        )

        certificates = self.handler.handle_verify_chain(command)

        self.assertEqual([len(c.domain) for c in certificates], [3, 2])
        self.assertEqual(self.certified[0].size, 2)

    def test_verify_chain_reports_failed_link(self):
        command = VerifyChainCommand(
            model=ZdBlockLattice((2,)), domains=(INTERVAL, INTERVAL[3:])
        )

        with self.assertRaises(VerificationFailed):
            self.handler.handle_verify_chain(command)

    def test_serialized_reduction(self):
        command = ReduceDomainCommand(model=ZdBlockLattice((2,)), domain=INTERVAL)
        result = self.handler.handle_reduce(command)

        data = serialize_reduction(result, with_witnesses=True)

        self.assertEqual(data["format"], 1)
        self.assertEqual(data["domain"]["points"], [[-1], [0]])
        self.assertEqual(data["ledger"], "4 → 3 → 2")
        self.assertEqual(data["steps"][0]["certificate"]["n0"], 1)
