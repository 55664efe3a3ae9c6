#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "hnlg/error.hpp"
#include "hnlg/pipeline.hpp"
#include "hnlg/report.hpp"

namespace hnlg {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kFormat = "hnlg-run 1";

std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) t = static_cast<std::time_t>(std::atoll(epoch));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string document_file_text(const Document& d) {
  std::string out;
  for (const Sentence& s : d.sentences) out += s.text + "\n";
  return out;
}

Document document_from_file_text(const std::string& text, GeneratorTag tag, const std::vector<Origin>& provenance) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return make_document(lines, tag, provenance);
}

void make_dirs(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

nlohmann::ordered_json provenance_json(const std::vector<RunDocument>& docs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (!docs.empty() && !docs.front().document.sentences.empty()) {
    for (Origin o : docs.front().document.sentences.front().provenance) arr.push_back(std::string(to_string(o)));
  }
  return arr;
}

void write_documents(const fs::path& dir, const std::vector<RunDocument>& docs) {
  make_dirs(dir);
  for (const RunDocument& d : docs) {
    if (!is_valid_record_id(d.record_id)) throw IoError("record id unsafe as file name: " + d.record_id);
    write_file(dir / (d.record_id + ".txt"), document_file_text(d.document));
  }
}

}  // namespace

fs::path persist_run(const ExperimentRun& run, const fs::path& dir) {
  make_dirs(dir);
  const fs::path docs = dir / "docs";
  write_documents(docs / "reference", run.references);
  for (const SystemRun& s : run.systems) write_documents(docs / s.system, s.documents);

  write_file(dir / "report.csv", report_csv(make_report_table(run.reports())));

  nlohmann::ordered_json m;
  m["format"] = std::string(kFormat);
  m["created"] = timestamp();
  m["seed"] = run.config.seed;
  m["config_digest"] = run.config.digest();
  m["config"] = run.config.to_json();
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const RunDocument& r : run.references) records.push_back({{"id", r.record_id}, {"group", r.group_id}});
  m["records"] = std::move(records);
  nlohmann::ordered_json systems = nlohmann::ordered_json::array();
  for (const SystemRun& s : run.systems) {
    nlohmann::ordered_json sj;
    sj["name"] = s.system;
    sj["tag"] = s.documents.empty() ? std::string(s.system) : std::string(to_string(s.documents.front().document.generator));
    sj["provenance"] = provenance_json(s.documents);
    sj["label"] = std::string(to_string(s.report.label));
    sj["skipped"] = s.skipped;
    nlohmann::ordered_json ids = nlohmann::ordered_json::array();
    for (const RunDocument& d : s.documents) ids.push_back(d.record_id);
    sj["documents"] = std::move(ids);
    systems.push_back(std::move(sj));
  }
  m["systems"] = std::move(systems);
  m["report"] = "report.csv";

  const fs::path manifest = dir / "manifest.json";
  write_file(manifest, m.dump(2) + "\n");
  return manifest;
}

ExperimentRun load_run(const fs::path& dir) {
  const fs::path manifest_path = dir / "manifest.json";
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("manifest " + manifest_path.string() + ": " + e.what());
  }
  try {
    if (m.at("format").get<std::string>() != kFormat) throw InvalidInput("unsupported run format");
    ExperimentRun run;
    run.config = ExperimentConfig::from_json(m.at("config"));
    std::map<std::string, std::size_t> group_of;
    const fs::path docs = dir / "docs";
    for (const auto& r : m.at("records")) {
      const std::string id = r.at("id").get<std::string>();
      const std::size_t group = r.at("group").get<std::size_t>();
      if (!is_valid_record_id(id)) throw InvalidInput("unsafe record id in manifest: " + id);
      group_of[id] = group;
      run.references.push_back(
          {id, group, document_from_file_text(read_file(docs / "reference" / (id + ".txt")), GeneratorTag::Reference, {})});
    }
    for (const auto& sj : m.at("systems")) {
      SystemRun s;
      s.system = sj.at("name").get<std::string>();
      if (!is_valid_record_id(s.system)) throw InvalidInput("unsafe system name in manifest");
      const auto tag = parse_generator_tag(sj.at("tag").get<std::string>()).value_or(GeneratorTag::Reference);
      std::vector<Origin> provenance;
      for (const auto& p : sj.at("provenance")) {
        auto o = parse_origin(p.get<std::string>());
        if (!o) throw InvalidInput("unknown provenance in manifest");
        provenance.push_back(*o);
      }
      s.skipped = sj.at("skipped").get<std::size_t>();
      for (const auto& idj : sj.at("documents")) {
        const std::string id = idj.get<std::string>();
        auto g = group_of.find(id);
        if (g == group_of.end()) throw InvalidInput("document for unknown record " + id);
        s.documents.push_back(
            {id, g->second, document_from_file_text(read_file(docs / s.system / (id + ".txt")), tag, provenance)});
      }
      run.systems.push_back(std::move(s));
    }
    return run;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("manifest " + manifest_path.string() + ": " + e.what());
  }
}

}  // namespace hnlg
