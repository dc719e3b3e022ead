import unittest

from fano.eisenstein import EisensteinInt
from fano.errors import FormSyntaxError
from fano.fibrations import LinearForm, lambda_multiple, shifted_form
from fano.forms import parse_form_expr, parse_linear_form, tokenize


class TestTokenize(unittest.TestCase):

    def test_tokens_keep_their_position(self):
        tokens = tokenize('x4 - (w^2)*x5')
        self.assertEqual(['var', 'op', 'op', 'alpha', 'op', 'int', 'op', 'op', 'var', 'end'],
                         [token.kind for token in tokens])
        self.assertEqual(3, tokens[1].position)

    def test_raises_for_unknown_characters(self):
        with self.assertRaises(FormSyntaxError) as context:
            tokenize('x1 $ x2')
        self.assertEqual(3, context.exception.position)


class TestParseLinearForm(unittest.TestCase):

    def test_differences(self):
        self.assertEqual(LinearForm.difference(1, 2), parse_linear_form('x1 - x2'))
        self.assertEqual(LinearForm.difference(4, 5, 2), parse_linear_form('x4 - (w^2)*x5'))
        self.assertEqual(LinearForm.difference(4, 5, 2), parse_linear_form('x4-w^2*x5'))

    def test_scalar_multiples(self):
        self.assertEqual(lambda_multiple(1), parse_linear_form('(1-w)*x1'))
        self.assertEqual(lambda_multiple(1), parse_linear_form('x1*(1-w)'))
        self.assertEqual(shifted_form(EisensteinInt(2)), parse_linear_form('x1 - (1+(1-w)*2)*x2'))

    def test_rendered_forms_parse_back(self):
        for form in (LinearForm.difference(4, 5, 2), LinearForm.difference(1, 3, 1), lambda_multiple(5)):
            self.assertEqual(form, parse_linear_form(str(form)))

    def test_expression_keeps_the_source(self):
        expr = parse_form_expr('x2 - x3')
        self.assertEqual('x2 - x3', expr.source)
        self.assertEqual(LinearForm.difference(2, 3), expr.form)

    def test_raises_for_products_of_variables(self):
        with self.assertRaises(FormSyntaxError) as context:
            parse_linear_form('x1*x2')
        self.assertEqual(2, context.exception.position)

    def test_raises_for_malformed_input(self):
        for text in ('x6', 'x1 + 1', 'x1 +', '(x1', 'x1^2', 'x1 x2', ''):
            with self.subTest(text=text):
                with self.assertRaises(FormSyntaxError):
                    parse_linear_form(text)


if __name__ == '__main__':
    unittest.main()
