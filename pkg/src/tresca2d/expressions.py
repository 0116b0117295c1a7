"""Tiny arithmetic expressions for coefficient functions on the command line.

A deliberately small language so a run is reproducible from a single shell
line: variables (``x``, ``y``, and optionally ``t`` for parameter families),
numeric literals, ``+ - * /``, unary minus, and the functions ``sin``,
``cos``, ``exp``, ``abs``, and ``clamp(v, lo, hi)`` (the only piecewise
primitive).  Parsed through :mod:`ast` against a strict whitelist — no
names, calls, or operators beyond the list above ever evaluate.

Examples
--------
>>> f = parse_expression("clamp(sin(3.14159*x), -1, 0.5) * y")
>>> round(f(0.5, 2.0), 6)
1.0
"""

from __future__ import annotations

import ast

import numpy as np

__all__ = ["ExpressionError", "parse_expression"]

_FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "abs": np.abs,
    "clamp": lambda v, lo, hi: np.clip(v, lo, hi),
}

_FUNCTION_ARITY = {"sin": 1, "cos": 1, "exp": 1, "abs": 1, "clamp": 3}

_BINARY_OPS = (ast.Add, ast.Sub, ast.Mult, ast.Div)


class ExpressionError(ValueError):
    """Raised when an expression fails to parse or uses anything off-list."""


def _validate(node: ast.AST, variables: tuple[str, ...]) -> None:
    if isinstance(node, ast.Expression):
        _validate(node.body, variables)
    elif isinstance(node, ast.BinOp):
        if not isinstance(node.op, _BINARY_OPS):
            raise ExpressionError(
                f"operator {type(node.op).__name__} not allowed; use + - * /"
            )
        _validate(node.left, variables)
        _validate(node.right, variables)
    elif isinstance(node, ast.UnaryOp):
        if not isinstance(node.op, ast.USub):
            raise ExpressionError(
                f"unary operator {type(node.op).__name__} not allowed; only minus"
            )
        _validate(node.operand, variables)
    elif isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in _FUNCTIONS:
            raise ExpressionError(
                "only sin, cos, exp, abs, and clamp may be called"
            )
        want = _FUNCTION_ARITY[node.func.id]
        if len(node.args) != want or node.keywords:
            raise ExpressionError(
                f"{node.func.id}() takes exactly {want} positional argument(s)"
            )
        for arg in node.args:
            _validate(arg, variables)
    elif isinstance(node, ast.Name):
        if node.id not in variables:
            raise ExpressionError(
                f"unknown name {node.id!r}; variables are {', '.join(variables)}"
            )
    elif isinstance(node, ast.Constant):
        if not isinstance(node.value, (int, float)) or isinstance(node.value, bool):
            raise ExpressionError(f"literal {node.value!r} is not a number")
    else:
        raise ExpressionError(f"syntax element {type(node).__name__} not allowed")


def parse_expression(text: str, variables: tuple[str, ...] = ("x", "y")):
    """Compile a coefficient expression into a vectorized callable.

    Parameters
    ----------
    text : str
        Expression in the variables given, e.g. ``"-2*abs(x) + sin(y)/2"``.
    variables : tuple of str
        Names the expression may reference, in the order the returned
        callable accepts them.

    Returns
    -------
    callable
        Accepts scalars or numpy arrays (one positional argument per
        variable) and returns the elementwise value.

    Raises
    ------
    ExpressionError
        On any syntax error or use of a name, call, or operator outside
        the documented list.
    """
    if not isinstance(text, str) or not text.strip():
        raise ExpressionError("expression must be a nonempty string")
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"could not parse {text!r}: {exc.msg}") from exc
    _validate(tree, variables)
    code = compile(tree, "<expression>", "eval")
    namespace = {"__builtins__": {}, **_FUNCTIONS}

    def evaluate(*args):
        if len(args) != len(variables):
            raise TypeError(
                f"expression takes {len(variables)} arguments ({', '.join(variables)})"
            )
        local = dict(zip(variables, args))
        return eval(code, namespace, local)

    evaluate.__doc__ = f"Evaluate {text!r} at ({', '.join(variables)})."
    return evaluate
