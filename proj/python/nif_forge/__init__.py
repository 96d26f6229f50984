# Copyright 2026 The NIF Forge Authors.
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
"""Wikipedia HTML to NIF conversion, link enrichment and validation."""

from nif_forge._nif_forge import (
    Document,
    NifError,
    ParseError,
    ProfileError,
    StatsError,
    enrich,
    extract,
    fleiss_kappa,
    mint_uri,
    parse_ntriples,
    percent_new,
    sanitize_utf8,
    summarize,
    validate_ntriples,
)

__all__ = [
    "Document",
    "NifError",
    "ParseError",
    "ProfileError",
    "StatsError",
    "enrich",
    "extract",
    "fleiss_kappa",
    "mint_uri",
    "parse_ntriples",
    "percent_new",
    "sanitize_utf8",
    "summarize",
    "validate_ntriples",
]
