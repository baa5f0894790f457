// Copyright 2026 The Uzannot Authors.
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

#include "uzannot/corpus_format.h"

#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "str_util.h"
#include "uzannot/utf8.h"

namespace uzannot {

namespace {

namespace pt = boost::property_tree;

constexpr std::string_view kHeaderPrefix = "## ";
constexpr std::string_view kXmlDeclaration = R"(<?xml version="1.0" encoding="UTF-8"?>)";

void CheckIdentifier(const std::string &value, std::string_view field) {
  if (value.empty()) throw FormatError(std::string(field) + " is empty");
  for (const auto &cp : utf8::Decode(value)) {
    if (utf8::IsSpace(cp.value)) {
      throw FormatError(std::string(field) + " '" + value + "' contains whitespace");
    }
  }
}

std::string EscapeXml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

bool IsBlank(std::string_view text) { return internal::TrimAscii(text).empty(); }

[[noreturn]] void SchemaError(const std::string &message) {
  throw FormatError("corpus XML: " + message);
}

std::string Attribute(const pt::ptree &node, const char *element, const char *name) {
  const auto attrs = node.get_child_optional("<xmlattr>");
  if (attrs) {
    if (const auto value = attrs->get_optional<std::string>(pt::ptree::path_type(name, '\0'))) {
      return *value;
    }
  }
  SchemaError(std::string("<") + element + "> lacks attribute " + name);
}

void CheckAttributes(const pt::ptree &node, const char *element,
                     std::initializer_list<std::string_view> allowed) {
  const auto attrs = node.get_child_optional("<xmlattr>");
  if (!attrs) return;
  for (const auto &[name, value] : *attrs) {
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      SchemaError(std::string("unexpected attribute ") + name + " on <" + element + ">");
    }
  }
}

// Container elements may only hold whitespace between their children.
void CheckNoText(const pt::ptree &node, const char *element) {
  if (!IsBlank(node.data())) {
    SchemaError(std::string("unexpected text inside <") + element + ">");
  }
}

std::string LeafText(const pt::ptree &node, const char *element) {
  for (const auto &[name, child] : node) {
    if (name == "<xmlattr>") SchemaError(std::string("<") + element + "> takes no attributes");
    SchemaError(std::string("<") + element + "> must contain only text");
  }
  return node.data();
}

AnnotationUnit ReadUnit(const pt::ptree &node) {
  CheckNoText(node, "unit");
  AnnotationUnit unit;
  for (const auto &[name, child] : node) {
    if (name == "w") {
      if (!unit.tags.empty()) SchemaError("<w> after <t> in <unit>");
      unit.words.push_back(LeafText(child, "w"));
    } else if (name == "t") {
      unit.tags.push_back(LeafText(child, "t"));
    } else {
      SchemaError("unexpected <" + name + "> in <unit>");
    }
  }
  if (unit.words.empty()) SchemaError("<unit> without <w>");
  return unit;
}

CorpusRecord ReadSentence(const pt::ptree &node, const std::string &text_id,
                          const std::string &category) {
  CheckNoText(node, "sentence");
  CheckAttributes(node, "sentence", {"id", "index", "annotator", "mode"});
  CorpusRecord record;
  record.text_id = text_id;
  record.category = category;
  record.sentence_id = Attribute(node, "sentence", "id");
  record.annotator = Attribute(node, "sentence", "annotator");
  const auto index = internal::ParseInt<int>(Attribute(node, "sentence", "index"));
  if (!index || *index < 0) SchemaError("bad sentence index");
  record.sentence_index = *index;
  const auto mode = ParseModeCode(Attribute(node, "sentence", "mode"));
  if (!mode) SchemaError("sentence mode must be M or S");
  record.sentence.mode = *mode;

  for (const auto &[name, child] : node) {
    if (name == "<xmlattr>") continue;
    if (name == "unit") {
      record.sentence.items.emplace_back(ReadUnit(child));
    } else if (name == "pc") {
      const std::string mark = LeafText(child, "pc");
      if (mark.size() != 1 || !IsPunctuationMark(mark[0])) {
        SchemaError("bad punctuation '" + mark + "'");
      }
      record.sentence.items.emplace_back(Punctuation{mark[0]});
    } else {
      SchemaError("unexpected <" + name + "> in <sentence>");
    }
  }
  try {
    CheckWellFormed(record.sentence);
  } catch (const FormatError &e) {
    SchemaError("sentence " + record.sentence_id + ": " + e.what());
  }
  return record;
}

}  // namespace

bool SameTxtFields(const CorpusRecord &a, const CorpusRecord &b) {
  return a.sentence_id == b.sentence_id && a.annotator == b.annotator &&
         a.sentence == b.sentence;
}

bool IsTxtHeaderLine(std::string_view line) { return line.starts_with("##"); }

TxtHeader ParseTxtHeader(std::string_view line) {
  if (!line.starts_with(kHeaderPrefix)) throw FormatError("malformed header: " + std::string(line));
  const auto fields = internal::Split(line.substr(kHeaderPrefix.size()), ' ');
  constexpr std::string_view kKeys[] = {"sentence=", "annotator=", "mode="};
  if (fields.size() != 3) throw FormatError("malformed header: " + std::string(line));
  std::string_view values[3];
  for (int i = 0; i < 3; ++i) {
    if (!fields[i].starts_with(kKeys[i]) || fields[i].size() == kKeys[i].size()) {
      throw FormatError("malformed header: expected " + std::string(kKeys[i]) + "<value>");
    }
    values[i] = fields[i].substr(kKeys[i].size());
  }
  const auto mode = ParseModeCode(values[2]);
  if (!mode) throw FormatError("malformed header: mode must be M or S");
  return {std::string(values[0]), std::string(values[1]), *mode};
}

void ExportTxt(std::span<const CorpusRecord> records, std::ostream &out) {
  for (const auto &record : records) {
    CheckIdentifier(record.sentence_id, "sentence id");
    CheckIdentifier(record.annotator, "annotator");
    CheckWellFormed(record.sentence);
    out << kHeaderPrefix << "sentence=" << record.sentence_id
        << " annotator=" << record.annotator << " mode=" << ModeCode(record.sentence.mode)
        << '\n'
        << SerializeLine(record.sentence) << '\n';
  }
}

std::string ExportTxt(std::span<const CorpusRecord> records) {
  std::ostringstream out;
  ExportTxt(records, out);
  return out.str();
}

std::vector<CorpusRecord> ImportTxt(std::istream &in) {
  std::vector<CorpusRecord> records;
  std::optional<TxtHeader> header;
  int header_line = 0;
  std::string raw;
  int line_number = 0;
  const auto where = [&] { return "line " + std::to_string(line_number) + ": "; };
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string_view line = internal::StripCarriageReturn(raw);
    if (IsBlank(line)) continue;
    if (IsTxtHeaderLine(line)) {
      if (header) throw FormatError(where() + "header without annotation line");
      try {
        header = ParseTxtHeader(line);
      } catch (const FormatError &e) {
        throw FormatError(where() + e.what());
      }
      header_line = line_number;
      continue;
    }
    if (!header) throw FormatError(where() + "annotation line without header");
    CorpusRecord record;
    record.sentence_id = header->sentence_id;
    record.annotator = header->annotator;
    try {
      record.sentence = ParseLine(line, header->mode);
    } catch (const FormatError &e) {
      throw FormatError(where() + e.what());
    }
    records.push_back(std::move(record));
    header.reset();
  }
  if (header) {
    throw FormatError("line " + std::to_string(header_line) +
                      ": header without annotation line");
  }
  return records;
}

void ExportXml(std::span<const CorpusRecord> records, std::ostream &out) {
  out << kXmlDeclaration << '\n';
  if (records.empty()) {
    out << "<corpus/>\n";
    return;
  }
  out << "<corpus>\n";
  for (size_t i = 0; i < records.size(); ++i) {
    const auto &record = records[i];
    CheckIdentifier(record.sentence_id, "sentence id");
    CheckIdentifier(record.annotator, "annotator");
    CheckWellFormed(record.sentence);
    if (i == 0 || records[i - 1].text_id != record.text_id) {
      out << "  <text id=\"" << EscapeXml(record.text_id) << "\" category=\""
          << EscapeXml(record.category) << "\">\n";
    }
    out << "    <sentence id=\"" << EscapeXml(record.sentence_id) << "\" index=\""
        << record.sentence_index << "\" annotator=\"" << EscapeXml(record.annotator)
        << "\" mode=\"" << ModeCode(record.sentence.mode) << "\">\n";
    for (const auto &item : record.sentence.items) {
      if (const auto *punct = std::get_if<Punctuation>(&item)) {
        out << "      <pc>" << punct->mark << "</pc>\n";
        continue;
      }
      const auto &unit = std::get<AnnotationUnit>(item);
      out << "      <unit>";
      for (const auto &word : unit.words) out << "<w>" << EscapeXml(word) << "</w>";
      for (const auto &tag : unit.tags) out << "<t>" << tag << "</t>";
      out << "</unit>\n";
    }
    out << "    </sentence>\n";
    if (i + 1 == records.size() || records[i + 1].text_id != record.text_id) {
      out << "  </text>\n";
    }
  }
  out << "</corpus>\n";
}

std::string ExportXml(std::span<const CorpusRecord> records) {
  std::ostringstream out;
  ExportXml(records, out);
  return out.str();
}

std::vector<CorpusRecord> ImportXml(std::istream &in) {
  pt::ptree tree;
  try {
    pt::read_xml(in, tree, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error &e) {
    throw FormatError(std::string("corpus XML: ") + e.what());
  }

  const pt::ptree *corpus = nullptr;
  for (const auto &[name, child] : tree) {
    if (name == "corpus" && corpus == nullptr) {
      corpus = &child;
    } else if (name != "<xmlcomment>") {
      SchemaError("root element must be a single <corpus>");
    }
  }
  if (corpus == nullptr) SchemaError("missing <corpus> root");
  CheckNoText(*corpus, "corpus");

  std::vector<CorpusRecord> records;
  for (const auto &[name, text] : *corpus) {
    if (name == "<xmlattr>") SchemaError("<corpus> takes no attributes");
    if (name != "text") SchemaError("unexpected <" + name + "> in <corpus>");
    CheckNoText(text, "text");
    CheckAttributes(text, "text", {"id", "category"});
    const std::string text_id = Attribute(text, "text", "id");
    const std::string category = Attribute(text, "text", "category");
    for (const auto &[child_name, sentence] : text) {
      if (child_name == "<xmlattr>") continue;
      if (child_name != "sentence") SchemaError("unexpected <" + child_name + "> in <text>");
      records.push_back(ReadSentence(sentence, text_id, category));
    }
  }
  return records;
}

TxtScan ScanTxt(std::istream &in) {
  TxtScan scan;
  std::optional<TxtHeader> header;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string_view line = internal::StripCarriageReturn(raw);
    if (IsBlank(line)) continue;
    if (IsTxtHeaderLine(line)) {
      try {
        header = ParseTxtHeader(line);
      } catch (const FormatError &e) {
        scan.header_errors.emplace_back(line_number, e.what());
        header.reset();
      }
      continue;
    }
    TxtEntry entry;
    entry.line_number = line_number;
    entry.header = std::move(header);
    header.reset();
    entry.line = std::string(line);
    const Mode mode = entry.header ? entry.header->mode : Mode::kMorphological;
    try {
      entry.sentence = ParseLine(line, mode);
    } catch (const LineSyntaxError &e) {
      entry.error = e.what();
      entry.error_item = static_cast<size_t>(e.item_index());
    }
    scan.entries.push_back(std::move(entry));
  }
  return scan;
}

}  // namespace uzannot
