// Copyright 2026 The NIF Forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "nif_forge/cleaner.h"
#include "nif_forge/enricher.h"
#include "nif_forge/extractor.h"
#include "nif_forge/pipeline.h"
#include "nif_forge/profile.h"
#include "nif_forge/rdf.h"
#include "nif_forge/stats.h"
#include "nif_forge/unicode.h"
#include "nif_forge/validator.h"

namespace py = pybind11;
using namespace nif_forge;

namespace {

std::string ToRdf(const NifDocument &doc, const std::string &format,
                  bool mark_enriched) {
  SerializeOptions options;
  options.mark_enriched = mark_enriched;
  std::ostringstream out;
  if (format == "nt") {
    Serialize(doc, RdfFormat::kNTriples, out, options);
  } else if (format == "ttl") {
    Serialize(doc, RdfFormat::kTurtle, out, options);
  } else {
    throw py::value_error("format must be 'nt' or 'ttl'");
  }
  return out.str();
}

py::list Links(const NifDocument &doc) {
  py::list out;
  auto add = [&out](const LinkAnnotation &l) {
    py::dict d;
    d["uri"] = l.uri;
    d["begin"] = l.begin;
    d["end"] = l.end;
    d["anchor"] = l.anchor;
    d["target"] = l.target;
    d["kind"] = std::string(ToString(l.kind));
    d["enriched"] = l.provenance == Provenance::kEnriched;
    out.append(d);
  };
  ForEachSection(doc.context, [&](const NifSection &s) {
    for (const NifParagraph &p : s.paragraphs) {
      for (const LinkAnnotation &l : p.links) add(l);
    }
  });
  for (const LinkAnnotation &l : doc.loose_links) add(l);
  return out;
}

py::dict ReportDict(const EnrichmentReport &r) {
  py::dict d;
  d["links_before"] = r.links_before;
  d["unique_anchors"] = r.unique_anchors;
  d["links_after"] = r.links_after;
  d["percent_new"] = r.percent_new;
  d["per_section_skipped"] = r.per_section_skipped;
  return d;
}

UnitKind ParseUnit(const std::string &unit) {
  if (unit == "context") return UnitKind::kContext;
  if (unit == "section") return UnitKind::kSection;
  if (unit == "paragraph") return UnitKind::kParagraph;
  if (unit == "title") return UnitKind::kTitle;
  if (unit == "link") return UnitKind::kLink;
  throw py::value_error("unknown unit: " + unit);
}

}  // namespace

PYBIND11_MODULE(_nif_forge, m) {
  m.doc() = "Wikipedia HTML to NIF conversion, link enrichment and validation";

  py::register_exception<ProfileError>(m, "ProfileError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NifError>(m, "NifError", PyExc_ValueError);
  py::register_exception<StatsError>(m, "StatsError", PyExc_ValueError);

  py::class_<NifDocument>(m, "Document")
      .def_property_readonly("uri", [](const NifDocument &d) { return d.context.uri; })
      .def_property_readonly("text", [](const NifDocument &d) { return d.context.text; })
      .def_property_readonly("language", [](const NifDocument &d) { return d.key.language; })
      .def_property_readonly("name", [](const NifDocument &d) { return d.key.name; })
      .def_property_readonly("paragraph_count", &CountParagraphs)
      .def_property_readonly("link_count", &CountLinks)
      .def("links", &Links, "Link annotations as dicts, in document order.")
      .def("to_rdf", &ToRdf, py::arg("format") = "nt",
           py::arg("mark_enriched") = false)
      .def("__eq__", [](const NifDocument &a, const NifDocument &b) { return a == b; })
      .def("__repr__", [](const NifDocument &d) {
        return "<Document " + d.context.uri + ">";
      });

  m.def(
      "extract",
      [](const std::string &html, const std::string &title,
         const std::string &lang, const std::string &dbpv,
         std::optional<std::string> profile_json) {
        ArticleMeta meta;
        meta.title = NormalizeArticleName(title);
        meta.language = lang;
        meta.corpus_version = dbpv;
        meta.source_url = "https://" + lang + ".wikipedia.org/wiki/" + meta.title;
        const CleaningProfile profile =
            LoadProfile(profile_json ? *profile_json
                                     : std::string(BuiltinProfileJson()),
                        lang);
        py::gil_scoped_release release;
        return ExtractArticle(html, meta, profile);
      },
      py::arg("html"), py::arg("title"), py::arg("lang") = "en",
      py::arg("dbpv") = "2016-10", py::arg("profile_json") = py::none(),
      "Cleans rendered article HTML and builds its NIF document.");

  m.def(
      "enrich",
      [](const NifDocument &doc, std::vector<std::string> excluded_sections) {
        EnrichOptions options;
        options.excluded_sections = std::move(excluded_sections);
        EnrichResult r = Enrich(doc, options);
        return py::make_tuple(std::move(r.document), ReportDict(r.report));
      },
      py::arg("doc"), py::arg("excluded_sections") = std::vector<std::string>{},
      "Returns (enriched document, report dict).");

  m.def(
      "parse_ntriples",
      [](const std::string &text) { return ParseString(text); },
      py::arg("text"));

  m.def(
      "validate_ntriples",
      [](const std::string &text, int workers) {
        std::istringstream in(text);
        const ValidationReport report = ValidateStream(in, workers);
        py::list violations;
        for (const Violation &v : report.violations) {
          py::dict d;
          d["rule"] = v.rule;
          d["subject"] = v.subject;
          d["detail"] = v.detail;
          d["line"] = v.line;
          violations.append(d);
        }
        py::dict out;
        out["checked_triples"] = report.checked_triples;
        out["documents"] = report.documents;
        out["dropped_codepoints"] = report.dropped_codepoints;
        out["violations"] = violations;
        return out;
      },
      py::arg("text"), py::arg("workers") = 1);

  m.def(
      "sanitize_utf8",
      [](const py::bytes &data) {
        const SanitizedText s = SanitizeUtf8(std::string(data));
        return py::make_tuple(s.text, s.dropped);
      },
      py::arg("data"));

  m.def(
      "mint_uri",
      [](const std::string &lang, const std::string &name,
         const std::string &dbpv, const std::string &unit, std::size_t begin,
         std::size_t end) {
        return MintUri(DocumentKey{lang, name, dbpv}, ParseUnit(unit), begin, end);
      },
      py::arg("lang"), py::arg("name"), py::arg("dbpv"), py::arg("unit"),
      py::arg("begin") = 0, py::arg("end") = 0);

  m.def("percent_new", &PercentNew, py::arg("before"), py::arg("after"));

  m.def(
      "fleiss_kappa",
      [](std::vector<std::vector<std::uint64_t>> rows) {
        return FleissKappa(JudgmentMatrix{std::move(rows)});
      },
      py::arg("rows"));

  m.def(
      "summarize",
      [](const std::vector<NifDocument> &docs) {
        const CorpusSummary s = Summarize(docs);
        py::dict d;
        d["articles"] = s.articles;
        d["paragraphs"] = s.paragraphs;
        d["links"] = s.links;
        d["mean_links_per_article"] = s.mean_links_per_article;
        d["median_links_per_article"] = s.median_links_per_article;
        return d;
      },
      py::arg("docs"));
}
