"""Tests for the substitution query handler."""

import json

from django.test import SimpleTestCase

from substitutions.application import (
    DictionaryComplexityQuery,
    LegalDictionaryQuery,
    LoadDefinitionQuery,
    SubstitutionQueryHandler,
)
from substitutions.domain import SubstitutionFileNotFound
from substitutions.interfaces import serialize_dictionary


class SubstitutionQueryHandlerTest(SimpleTestCase):
    def setUp(self):
        self.handler = SubstitutionQueryHandler()
        self.definition = self.handler.handle_load(LoadDefinitionQuery("table-tiling"))

    def test_load_missing_definition(self):
        with self.assertRaises(SubstitutionFileNotFound):
            self.handler.handle_load(LoadDefinitionQuery("missing"))

    def test_dictionary_defaults_to_the_testing_domain(self):
        dictionary = self.handler.handle_dictionary(
            LegalDictionaryQuery(self.definition)
        )

        self.assertEqual(dictionary.shape.points, ((0, 0), (0, 1), (1, 0), (1, 1)))
        self.assertNotIn((0, 0, 0, 0), dictionary)

    def test_dictionary_serializes_as_sorted_strings(self):
        dictionary = self.handler.handle_dictionary(
            LegalDictionaryQuery(self.definition)
        )

        data = serialize_dictionary(dictionary, self.definition.alphabet)

        self.assertEqual(data["format"], 1)
        self.assertEqual(data["size"], len(dictionary))
        self.assertEqual(data["windows"], sorted(data["windows"]))
        self.assertNotIn("red red red red", data["windows"])
        self.assertEqual(json.loads(json.dumps(data)), data)

    def test_complexity_rows(self):
        rows = self.handler.handle_complexity(
            DictionaryComplexityQuery(self.definition, r_max=2)
        )

        self.assertEqual([r for r, _, _ in rows], [1, 2])
        self.assertEqual(rows[0][1:], (4, None))
        self.assertGreater(rows[1][2], 0)
