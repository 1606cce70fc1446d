# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Matroids through their lattices of cyclic flats."""

from ._core import (
    CflatError,
    Matroid,
    bitransversal,
    catalog,
    cyclic_width,
    direct_sum,
    dual,
    excluded_minor_pn,
    free_coextension,
    free_extension,
    free_product,
    gimenez,
    has_minor,
    higgs_lift,
    ingleton_transversal,
    is_isomorphic,
    is_nested,
    minor,
    nested,
    nested_sequence,
    random_matroid,
    rank_generating_function,
    realize_lattice,
    relax,
    truncate,
    tutte_polynomial,
    uniform,
)

__all__ = [
    "CflatError",
    "Matroid",
    "bitransversal",
    "catalog",
    "cyclic_width",
    "direct_sum",
    "dual",
    "excluded_minor_pn",
    "free_coextension",
    "free_extension",
    "free_product",
    "gimenez",
    "has_minor",
    "higgs_lift",
    "ingleton_transversal",
    "is_isomorphic",
    "is_nested",
    "minor",
    "nested",
    "nested_sequence",
    "random_matroid",
    "rank_generating_function",
    "realize_lattice",
    "relax",
    "truncate",
    "tutte_polynomial",
    "uniform",
]
