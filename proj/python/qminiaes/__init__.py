# Copyright 2026 The qminiaes Authors
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

"""Mini-AES reversible-circuit compiler, simulator and Grover cost estimator.

Blocks are 16-bit strings in the "xxxx xxxx xxxx xxxx" form, one nibble per
group, most significant bit first within each group.
"""

from ._core import (
    Circuit,
    decrypt,
    encrypt,
    encrypt_trace,
    grover_cost,
    grover_cost_of,
    parse_circuit,
    resources,
    sbox_equations,
    simulate,
    synthesize,
    synthesize_with_plan,
)

__all__ = [
    "Circuit",
    "decrypt",
    "encrypt",
    "encrypt_trace",
    "grover_cost",
    "grover_cost_of",
    "parse_circuit",
    "resources",
    "sbox_equations",
    "simulate",
    "synthesize",
    "synthesize_with_plan",
]

__version__ = "0.1.0"
