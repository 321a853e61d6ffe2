"""Arithmetic expressions in one variable ``x`` for log-ratio configs.

Grammar: numbers, the constants ``pi`` and ``e``, the variable ``x``,
binary ``+ - * /``, power ``^`` (or ``**``), unary ``+``/``-``, parentheses,
and the functions ``exp(...)`` and ``ln(...)``. The text is parsed with
Python's own ``ast`` module and every node is checked against that
whitelist, so nothing else can be evaluated.
"""

from __future__ import annotations

import ast
import math
import operator

import numpy as np

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_UNARY = {ast.UAdd: operator.pos, ast.USub: operator.neg}
_FUNCS = {"exp": np.exp, "ln": np.log}
_CONSTS = {"pi": math.pi, "e": math.e}


class ExpressionError(ValueError):
    """Text is not a valid expression; ``column`` is 1-based when known."""

    def __init__(self, message, column=None):
        super().__init__(message if column is None else f"column {column}: {message}")
        self.column = column


class Expression:
    """A compiled expression, callable on floats or NumPy arrays."""

    def __init__(self, text: str):
        self.text = text
        try:
            tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
        except SyntaxError as exc:
            raise ExpressionError(f"cannot parse {text!r}: {exc.msg}", exc.offset) from None
        self._fn = _compile(tree.body)

    def __call__(self, x):
        if np.ndim(x) == 0:
            x = np.float64(x)
        with np.errstate(all="ignore"):
            out = self._fn(x)
        if np.ndim(out) == 0 and np.ndim(x) == 0:
            return float(out)
        return out

    def __eq__(self, other):
        return isinstance(other, Expression) and other.text == self.text

    def __hash__(self):
        return hash(self.text)

    def __repr__(self):
        return f"Expression({self.text!r})"


def _compile(node):
    col = getattr(node, "col_offset", None)
    col = None if col is None else col + 1
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
            raise ExpressionError(f"unsupported literal {node.value!r}", col)
        value = np.float64(node.value)
        return lambda x: value
    if isinstance(node, ast.Name):
        if node.id == "x":
            return lambda x: x
        if node.id in _CONSTS:
            value = np.float64(_CONSTS[node.id])
            return lambda x: value
        raise ExpressionError(f"unknown name {node.id!r}", col)
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        op = _BINOPS[type(node.op)]
        left, right = _compile(node.left), _compile(node.right)
        return lambda x: op(left(x), right(x))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
        op = _UNARY[type(node.op)]
        arg = _compile(node.operand)
        return lambda x: op(arg(x))
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in _FUNCS:
            raise ExpressionError("only exp(...) and ln(...) may be called", col)
        if len(node.args) != 1 or node.keywords:
            raise ExpressionError(f"{node.func.id} takes exactly one argument", col)
        fn = _FUNCS[node.func.id]
        arg = _compile(node.args[0])
        return lambda x: fn(arg(x))
    raise ExpressionError(f"unsupported syntax {type(node).__name__}", col)
