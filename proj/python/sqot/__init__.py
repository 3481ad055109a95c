# Copyright 2026 The sqot Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Oblivious transfer with single-qubit rotations.

Bit strings are passed as text such as ``"0110"``; qubit registers are lists
of ``(amp0, amp1)`` pairs.
"""

from ._sqot import (
    HashFunction,
    ProtocolViolation,
    RandomSource,
    SecretKey,
    SessionParams,
    Transfer,
    agree_session,
    alice_transfer,
    assess_randomness,
    bob_open,
    count_critical_angles,
    decrypt,
    derive_trial_seed,
    encode_bit,
    encrypt,
    experiment_names,
    helstrom_probability,
    is_critical_angle,
    key_to_bits,
    keygen,
    obliviousness_bound,
    run_experiment,
    sample_hash,
    sample_key,
    single_bit_ot,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
