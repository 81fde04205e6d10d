// Batch front-end for the finrel library: validates files, computes cores,
// runs the two constructions and their round trips, and generates example
// documents.  Reports go to standard output as JSON (or text tables with
// --format text); constructions emit documents.  Exit codes: 0 when every
// check passes, 1 on check or construction failure, 2 on parse, kind, or
// I/O errors.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "finrel/generators.hpp"
#include "finrel/json_io.hpp"

namespace {

using nlohmann::json;

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw finrel::ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw finrel::ParseError(path + ": " + e.what());
  }
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw finrel::ParseError("cannot write '" + out_path + "'");
  out << text;
}

void emit_document(const json& doc, const std::string& out_path) {
  write_output(out_path, doc.dump(2) + "\n");
}

int emit_report(const finrel::CheckReport& rep, const std::string& format,
                const std::string& out_path) {
  if (format == "text") {
    write_output(out_path, rep.to_text());
  } else {
    write_output(out_path, finrel::report_to_json(rep).dump(2) + "\n");
  }
  return rep.all_passed() ? 0 : 1;
}

int cmd_validate(const std::string& path, const std::string& format,
                 const std::string& out_path) {
  json doc = load_document(path);
  std::string kind = finrel::document_kind(doc);
  finrel::CheckReport rep;
  if (kind == finrel::kKindGroupoid) {
    rep = finrel::validate_groupoid(finrel::decode_groupoid(doc));
  } else if (kind == finrel::kKindDouble) {
    rep = finrel::validate_double(finrel::decode_double(doc));
  } else {
    rep = finrel::check_hopfoid(finrel::decode_hopfoid(doc));
  }
  return emit_report(rep, format, out_path);
}

int cmd_check(const std::string& path, const std::string& format,
              const std::string& out_path) {
  finrel::Hopfoid h = finrel::decode_hopfoid(load_document(path));
  return emit_report(finrel::check_hopfoid(h), format, out_path);
}

int cmd_roundtrip(const std::string& path, const std::string& format,
                  const std::string& out_path) {
  json doc = load_document(path);
  std::string kind = finrel::document_kind(doc);
  finrel::CheckReport rep;
  if (kind == finrel::kKindDouble) {
    rep = finrel::roundtrip_double(finrel::decode_double(doc));
  } else if (kind == finrel::kKindHopfoid) {
    rep = finrel::roundtrip_hopfoid(finrel::decode_hopfoid(doc));
  } else {
    throw finrel::ParseError(
        "document.kind: no round trip for kind '" + kind +
        "' (expected 'double-groupoid' or 'hopfoid')");
  }
  return emit_report(rep, format, out_path);
}

int cmd_core(const std::string& path, const std::string& out_path) {
  finrel::DoubleGroupoid d = finrel::decode_double(load_document(path));
  emit_document(finrel::encode_groupoid(finrel::core_groupoid_square(d)),
                out_path);
  return 0;
}

int cmd_hopfoid(const std::string& path, const std::string& out_path) {
  finrel::DoubleGroupoid d = finrel::decode_double(load_document(path));
  emit_document(finrel::encode_hopfoid(finrel::build_hopfoid(d)), out_path);
  return 0;
}

int cmd_double(const std::string& path, const std::string& out_path) {
  finrel::Hopfoid h = finrel::decode_hopfoid(load_document(path));
  emit_document(finrel::encode_double(finrel::build_double(h)), out_path);
  return 0;
}

finrel::Groupoid named_base(const std::string& name) {
  try {
    return finrel::base_groupoid(name);
  } catch (const finrel::StructureError& e) {
    throw finrel::ParseError(e.what());
  }
}

int cmd_gen(const std::string& family, const std::string& name,
            const std::string& out_path, unsigned seed,
            std::size_t max_size) {
  if (family == "corpus") {
    if (out_path.empty()) {
      throw finrel::ParseError("gen corpus requires --out DIR");
    }
    std::filesystem::create_directories(out_path);
    finrel::CorpusSpec spec;
    spec.max_squares = max_size;
    spec.seed = seed;
    json written = json::array();
    for (const finrel::CorpusItem& item : finrel::small_corpus(spec)) {
      std::filesystem::path file =
          std::filesystem::path(out_path) / (item.name + ".json");
      std::ofstream out(file);
      if (!out) throw finrel::ParseError("cannot write '" + file.string() + "'");
      out << finrel::encode_double(item.d).dump(2) << "\n";
      written.push_back(file.string());
    }
    std::cout << json{{"written", std::move(written)}}.dump(2) << "\n";
    return 0;
  }
  if (name.empty()) {
    throw finrel::ParseError("gen " + family + " requires a base groupoid name");
  }
  if (family == "groupoid") {
    emit_document(finrel::encode_groupoid(named_base(name)), out_path);
  } else if (family == "trivial") {
    emit_document(finrel::encode_double(finrel::trivial_double(named_base(name))),
                  out_path);
  } else {
    emit_document(finrel::encode_double(finrel::pair_double(named_base(name))),
                  out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finrel: finite double groupoids and hopfoids in the relation "
      "category"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  std::string format = "json";
  std::string family;
  std::string name;
  unsigned seed = 0;
  std::size_t max_size = 36;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input document")->required();
  };
  auto add_report_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path,
                    "write the document here instead of stdout");
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "run every law of the structure in FILE, one check per law");
  add_file(validate);
  add_report_flags(validate);

  CLI::App* check = app.add_subcommand(
      "check", "run the hopfoid law suite on a hopfoid document");
  add_file(check);
  add_report_flags(check);

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip",
      "build the other structure and back, comparing piece by piece");
  add_file(roundtrip);
  add_report_flags(roundtrip);

  CLI::App* core = app.add_subcommand(
      "core", "compute the core groupoid of a double-groupoid document");
  add_file(core);
  add_out(core);

  CLI::App* hopfoid = app.add_subcommand(
      "hopfoid", "build the hopfoid of a double-groupoid document");
  add_file(hopfoid);
  add_out(hopfoid);

  CLI::App* dbl = app.add_subcommand(
      "double", "build the double groupoid of a hopfoid document");
  add_file(dbl);
  add_out(dbl);

  CLI::App* gen = app.add_subcommand(
      "gen", "generate example documents (see `gen --help` for families)");
  gen->add_option("family", family,
                  "one of: groupoid, trivial, pair, corpus")
      ->required()
      ->check(CLI::IsMember({"groupoid", "trivial", "pair", "corpus"}));
  gen->add_option("name", name,
                  "base groupoid name (Z2..Z6, S3, triv1..3, pair2..4, "
                  "Z2+Z3, Z2+pair2); unused for corpus");
  gen->add_option("--out", out_path,
                  "output file, or output directory for corpus");
  gen->add_option("--seed", seed, "corpus seed")->capture_default_str();
  gen->add_option("--max-size", max_size,
                  "largest admitted square count for corpus members")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(file, format, out_path);
    if (app.got_subcommand(check)) return cmd_check(file, format, out_path);
    if (app.got_subcommand(roundtrip)) return cmd_roundtrip(file, format, out_path);
    if (app.got_subcommand(core)) return cmd_core(file, out_path);
    if (app.got_subcommand(hopfoid)) return cmd_hopfoid(file, out_path);
    if (app.got_subcommand(dbl)) return cmd_double(file, out_path);
    if (app.got_subcommand(gen)) return cmd_gen(family, name, out_path, seed, max_size);
  } catch (const finrel::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const finrel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
