// Command-line front end: exact generalized inverses, EP verdicts, finite
// *-ring censuses, and verification certificates.
//
// Exit codes:
//   0  success (compute: all requested inverses exist; ep: element is EP)
//   1  usage, parse, or bound error
//   2  a requested inverse does not exist / element is not EP
//   3  theorem violation (census inclusion failure, invalid certificate);
//      this should never happen and indicates a bug
//   4  EP prerequisites missing (element is not group and MP invertible)

#include "geninv/json_io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using geninv::ExactMatrix;
using geninv::Json;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{1, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Json parse_json_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw CliError{1, path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                              ": JSON parse error: " + e.what()};
    }
}

ExactMatrix load_matrix(const std::string& path) {
    try {
        ExactMatrix m = geninv::matrix_from_json(parse_json_file(path));
        if (!m.is_square() || m.rows() == 0)
            throw CliError{1, path + ": expected a nonempty square matrix"};
        return m;
    } catch (const geninv::MatrixParseError& e) {
        throw CliError{1, path + ": " + e.what()};
    }
}

geninv::FiniteStarRing parse_ring_descriptor(const std::string& desc) {
    // "Z:n" or "Mk:Zp", e.g. "Z:6", "M2:Z3".
    try {
        if (desc.rfind("Z:", 0) == 0) {
            unsigned long n = std::stoul(desc.substr(2));
            return geninv::FiniteStarRing::zmod(static_cast<std::uint32_t>(n));
        }
        if (!desc.empty() && desc[0] == 'M') {
            auto colon = desc.find(":Z");
            if (colon != std::string::npos) {
                unsigned long k = std::stoul(desc.substr(1, colon - 1));
                unsigned long p = std::stoul(desc.substr(colon + 2));
                return geninv::FiniteStarRing::mat_zmod(static_cast<std::uint32_t>(k),
                                                        static_cast<std::uint32_t>(p));
            }
        }
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        throw CliError{1, "bad ring descriptor '" + desc + "': " + e.what()};
    }
    throw CliError{1, "bad ring descriptor '" + desc + "' (expected Z:n or Mk:Zp)"};
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError{1, "cannot write '" + out_path + "'"};
    out << content;
}

std::string matrix_text(const ExactMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]\n";
    }
    return os.str();
}

std::vector<geninv::InverseKind> parse_which(const std::string& which) {
    std::vector<geninv::InverseKind> kinds;
    std::stringstream ss(which);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "group") kinds.push_back(geninv::InverseKind::Group);
        else if (item == "mp") kinds.push_back(geninv::InverseKind::MoorePenrose);
        else if (item == "core") kinds.push_back(geninv::InverseKind::Core);
        else if (item == "dual_core") kinds.push_back(geninv::InverseKind::DualCore);
        else throw CliError{1, "unknown inverse '" + item + "' (group, mp, core, dual_core)"};
    }
    if (kinds.empty()) throw CliError{1, "--which selected no inverses"};
    return kinds;
}

struct Rendered {
    std::string text;
    int code;
};

Rendered run_compute_one(const std::string& path, const std::vector<geninv::InverseKind>& kinds,
                         bool json_format) {
    ExactMatrix a = load_matrix(path);
    int code = 0;
    Json results = Json::object();
    std::ostringstream text;
    for (auto kind : kinds) {
        auto res = geninv::compute_inverse(kind, a);
        const char* name = geninv::inverse_name(kind);
        if (res) {
            results[name] = Json{{"exists", true}, {"value", geninv::matrix_to_json(res.value())}};
            text << name << " =\n" << matrix_text(res.value());
        } else {
            results[name] = Json{{"exists", false}, {"reason", res.error().describe()}};
            text << name << ": " << res.error().describe() << "\n";
            code = 2;
        }
    }
    if (json_format) {
        Json doc{{"schema", "geninv.compute/1"},
                 {"input", geninv::matrix_to_json(a)},
                 {"results", std::move(results)}};
        return {doc.dump(2) + "\n", code};
    }
    return {text.str(), code};
}

Rendered run_verify_one(const std::string& path, bool json_format) {
    ExactMatrix a = load_matrix(path);
    auto cert = geninv::emit_certificate(a);
    int code = cert.valid ? 0 : 3;
    if (json_format)
        return {geninv::certificate_to_json(cert, "exact_matrix").dump(2) + "\n", code};
    std::ostringstream text;
    text << "certificate: " << (cert.valid ? "valid" : "INVALID") << "\n"
         << "ep: " << geninv::ep_status_name(cert.ep.status) << "\n";
    return {text.str(), code};
}

template <typename Fn>
int run_batch(const std::vector<std::string>& inputs, unsigned workers, const std::string& out,
              Fn&& fn) {
    std::vector<Rendered> rendered(inputs.size(), Rendered{"", 0});
    std::vector<std::optional<CliError>> errors(inputs.size());
    if (workers <= 1 || inputs.size() <= 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            try {
                rendered[i] = fn(inputs[i]);
            } catch (const CliError& e) {
                errors[i] = e;
            }
        }
    } else {
        std::vector<std::future<void>> jobs;
        std::size_t next = 0;
        // Outputs are buffered per input and emitted in input order, so the
        // bytes do not depend on the worker count.
        for (unsigned w = 0; w < workers && w < inputs.size(); ++w)
            jobs.push_back(std::async(std::launch::async, [&, w]() {
                for (std::size_t i = w; i < inputs.size(); i += workers) {
                    try {
                        rendered[i] = fn(inputs[i]);
                    } catch (const CliError& e) {
                        errors[i] = e;
                    }
                }
            }));
        (void)next;
        for (auto& j : jobs) j.get();
    }
    int code = 0;
    std::string all;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (errors[i]) {
            std::cerr << "error: " << errors[i]->message << "\n";
            code = std::max(code, errors[i]->code);
            continue;
        }
        all += rendered[i].text;
        code = std::max(code, rendered[i].code);
    }
    write_output(out, all);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized inverses over *-rings"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string which = "group,mp,core,dual_core";
    std::string out_path;
    std::string format = "json";
    std::uint64_t bound = geninv::kDefaultCensusBound;
    unsigned workers = 1;
    std::string descriptor;

    auto add_common = [&](CLI::App* cmd, bool with_inputs) {
        if (with_inputs)
            cmd->add_option("input", inputs, "matrix JSON file(s)")->required();
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        cmd->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--workers", workers, "worker thread count")
            ->check(CLI::Range(1u, 256u));
    };

    CLI::App* compute = app.add_subcommand("compute", "compute selected inverses of a matrix");
    add_common(compute, true);
    compute->add_option("--which", which, "comma list of group,mp,core,dual_core");

    CLI::App* verify = app.add_subcommand("verify", "emit a full verification certificate");
    add_common(verify, true);

    CLI::App* census_cmd = app.add_subcommand("census", "classify every element of a finite ring");
    census_cmd->add_option("ring", descriptor, "ring descriptor: Z:n or Mk:Zp")->required();
    add_common(census_cmd, false);
    census_cmd->add_option("--bound", bound, "census order bound")
        ->check(CLI::Range(std::uint64_t{1}, geninv::kHardCensusCap));

    CLI::App* ep_cmd = app.add_subcommand("ep", "EP test battery for a matrix");
    add_common(ep_cmd, true);

    CLI11_PARSE(app, argc, argv);
    const bool json_format = format == "json";

    try {
        if (compute->parsed()) {
            auto kinds = parse_which(which);
            return run_batch(inputs, workers, out_path, [&](const std::string& path) {
                return run_compute_one(path, kinds, json_format);
            });
        }
        if (verify->parsed()) {
            return run_batch(inputs, workers, out_path, [&](const std::string& path) {
                return run_verify_one(path, json_format);
            });
        }
        if (census_cmd->parsed()) {
            auto ring = parse_ring_descriptor(descriptor);
            geninv::CensusReport rep;
            try {
                rep = geninv::census(ring, bound, workers);
            } catch (const geninv::CensusBoundExceeded& e) {
                throw CliError{1, e.what()};
            }
            if (json_format) {
                write_output(out_path, geninv::census_to_json(rep).dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << "ring " << rep.ring << " (order " << rep.order << ")\n"
                     << "regular    " << rep.regular.size() << "\n"
                     << "group      " << rep.group.size() << "\n"
                     << "mp         " << rep.mp.size() << "\n"
                     << "core       " << rep.core.size() << "\n"
                     << "dual_core  " << rep.dual_core.size() << "\n"
                     << "core \\ mp  " << rep.core_not_mp.size() << "\n"
                     << "inclusions " << (rep.inclusions_hold ? "hold" : "VIOLATED") << "\n";
                write_output(out_path, text.str());
            }
            return rep.inclusions_hold ? 0 : 3;
        }
        if (ep_cmd->parsed()) {
            ExactMatrix a = load_matrix(inputs.at(0));
            auto verdict = geninv::ep_check(a);
            if (json_format) {
                Json doc = geninv::ep_to_json(verdict);
                doc["input"] = geninv::matrix_to_json(a);
                write_output(out_path, doc.dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << geninv::ep_status_name(verdict.status) << "\n";
                for (const auto& c : verdict.conditions)
                    text << "  " << c.name << ": " << (c.holds ? "yes" : "no") << "\n";
                write_output(out_path, text.str());
            }
            if (!verdict.consistent) return 3;
            switch (verdict.status) {
                case geninv::EpStatus::Ep: return 0;
                case geninv::EpStatus::NotEp: return 2;
                case geninv::EpStatus::PrerequisiteMissing: return 4;
            }
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
