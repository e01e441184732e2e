/* Copyright 2026 The roughsig Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "cli/cli.hpp"
#include "cli/field_spec.hpp"
#include "cli/report.hpp"
#include "roughsig/errors.hpp"
#include "roughsig/logode.hpp"
#include "roughsig/parallel.hpp"
#include "roughsig/sigkernel.hpp"
#include "roughsig/signature.hpp"
#include "roughsig/stream.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>

namespace roughsig::cli {
    namespace {
        using Json = nlohmann::ordered_json;

        struct JobConfig {
            std::string command;
            std::string input;
            std::string input_b;
            std::string output;
            std::string format{"json"};
            int depth{2};
            bool time_augment{false};
            std::string missing{"ffill"};
            std::string kernel{"linear"};
            double sigma{1.0};
            int refine{5};
            std::string delimiter{"comma"};
            bool header{false};
            std::string field;
            int steps{16};
            int substeps{8};
            std::string verify;
        };

        TableFormat table_format(const JobConfig& cfg) {
            return {cfg.delimiter == "tab" ? '\t' : ',', cfg.header};
        }

        EmbedOptions embed_options(const JobConfig& cfg) {
            return {MissingPolicy::ForwardFill, cfg.time_augment};
        }

        StaticKernel static_kernel(const JobConfig& cfg) {
            return cfg.kernel == "rbf" ? StaticKernel::rbf(cfg.sigma) : StaticKernel::linear();
        }

        // Parse failures are reported with the file they came from.
        PiecewiseLinearPath load_path(const InputFile& file, const JobConfig& cfg) {
            try {
                return embed_linear(parse_table(file.contents, table_format(cfg)), embed_options(cfg));
            } catch (const InputError& e) {
                throw InputError(file.path.string() + ": " + e.what());
            }
        }

        std::vector<PiecewiseLinearPath> load_paths(const std::vector<InputFile>& files, const JobConfig& cfg) {
            std::vector<PiecewiseLinearPath> out;
            out.reserve(files.size());
            for (const auto& f : files) {
                out.push_back(load_path(f, cfg));
            }
            return out;
        }

        const InputFile& single(const std::vector<InputFile>& files, const char* flag) {
            if (files.size() != 1) {
                throw InputError(std::string(flag) + " must name a single file for this command");
            }
            return files.front();
        }

        Json echo_config(const JobConfig& cfg) {
            Json c;
            c["command"] = cfg.command;
            c["input"] = cfg.input;
            if (cfg.command == "kernel" || cfg.command == "mmd") {
                c["input_b"] = cfg.input_b.empty() ? Json(nullptr) : Json(cfg.input_b);
            }
            c["depth"] = cfg.depth;
            if (cfg.command != "demo-insider") {
                c["time_augment"] = cfg.time_augment;
                c["missing"] = cfg.missing;
            }
            c["delimiter"] = cfg.delimiter;
            c["header"] = cfg.header;
            if (cfg.command == "kernel" || cfg.command == "mmd") {
                c["kernel"] = cfg.kernel;
                c["sigma"] = cfg.sigma;
                c["refine"] = cfg.refine;
                c.erase("depth");
            }
            if (cfg.command == "logode") {
                c["field"] = cfg.field;
                c["steps"] = cfg.steps;
                c["substeps"] = cfg.substeps;
            }
            if (cfg.command == "sig" && !cfg.verify.empty()) {
                c["verify"] = cfg.verify;
            }
            c["output"] = cfg.output.empty() ? Json("-") : Json(cfg.output);
            c["format"] = cfg.format;
            return c;
        }

        Json envelope(const JobConfig& cfg, const std::vector<InputFile>& inputs) {
            Json report;
            report["tool"] = {{"name", "roughsig"}, {"version", ROUGHSIG_VERSION}};
            report["config"] = echo_config(cfg);
            report["inputs"] = describe_inputs(inputs);
            return report;
        }

        Json run_sig(const JobConfig& cfg) {
            const auto files = read_inputs(cfg.input);
            const auto path = load_path(single(files, "--input"), cfg);
            const auto sig = signature(path, cfg.depth);
            auto report = envelope(cfg, files);
            Json result;
            result["width"] = path.dimension();
            result["depth"] = cfg.depth;
            result["interval"] = {sig.start, sig.end};
            result["signature"] = word_map(sig.sig);

            if (!cfg.verify.empty()) {
                const auto previous_files = read_inputs(cfg.verify);
                Json previous;
                try {
                    previous = Json::parse(single(previous_files, "--verify").contents);
                } catch (const Json::parse_error& e) {
                    throw InputError("--verify: " + cfg.verify + " is not a JSON report: " + e.what());
                }
                if (!previous.contains("result") || !previous["result"].contains("signature")) {
                    throw InputError("--verify: " + cfg.verify + " has no result.signature");
                }
                const auto& old_sig = previous["result"]["signature"];
                if (old_sig != result["signature"]) {
                    std::string first = "(key set differs)";
                    for (const auto& [word, value] : result["signature"].items()) {
                        if (!old_sig.contains(word) || old_sig[word] != value) {
                            first = "\"" + word + "\"";
                            break;
                        }
                    }
                    throw NumericalError("--verify: recomputed signature differs from " + cfg.verify + " at word " +
                                         first);
                }
                result["verified"] = {{"file", cfg.verify}, {"sha256", previous_files.front().sha256},
                                      {"identical", true}};
            }
            report["result"] = std::move(result);
            return report;
        }

        Json run_logsig(const JobConfig& cfg) {
            const auto files = read_inputs(cfg.input);
            const auto path = load_path(single(files, "--input"), cfg);
            const auto coords = log_signature(path, cfg.depth);
            auto report = envelope(cfg, files);
            Json result;
            result["width"] = path.dimension();
            result["depth"] = cfg.depth;
            result["interval"] = {path.start(), path.end()};
            result["basis"] = "lyndon";
            result["basis_size"] = coords.coords.size();
            result["logsignature"] = word_map(coords);
            report["result"] = std::move(result);
            return report;
        }

        Json run_logode(const JobConfig& cfg) {
            auto files = read_inputs(cfg.input);
            const auto path = load_path(single(files, "--input"), cfg);
            const auto field_files = read_inputs(cfg.field);
            LinearFieldSpec spec = [&] {
                try {
                    return parse_linear_field(single(field_files, "--field").contents);
                } catch (const InputError& e) {
                    throw InputError("--field " + cfg.field + ": " + e.what());
                }
            }();
            if (spec.fields.channels() != path.dimension()) {
                throw InputError("--field declares " + std::to_string(spec.fields.channels()) +
                                 " channels but the control path has " + std::to_string(path.dimension()));
            }
            const LogOdeConfig config{cfg.depth, uniform_partition(path, cfg.steps), cfg.substeps};
            const auto trajectory = solve_cde(spec.fields, path, config, spec.z0);

            files.insert(files.end(), field_files.begin(), field_files.end());
            auto report = envelope(cfg, files);
            Json result;
            result["state_dim"] = spec.fields.state_dim();
            result["channels"] = spec.fields.channels();
            result["solver"] = {{"method", "log-ode"}, {"inner", "rk4"}, {"substeps", cfg.substeps}};
            result["times"] = trajectory.times;
            result["states"] = trajectory.states;
            result["final"] = trajectory.states.back();
            report["result"] = std::move(result);
            return report;
        }

        Json kernel_meta(const JobConfig& cfg) {
            Json k;
            k["kind"] = cfg.kernel;
            if (cfg.kernel == "rbf") {
                k["sigma"] = cfg.sigma;
            }
            k["refine"] = cfg.refine;
            return k;
        }

        std::vector<std::size_t> grid_lengths(const std::vector<PiecewiseLinearPath>& paths, int refine) {
            std::vector<std::size_t> out;
            for (const auto& p : paths) {
                out.push_back((p.size() - 1) * (std::size_t{1} << refine) + 1);
            }
            return out;
        }

        Json matrix_json(const Eigen::MatrixXd& g) {
            Json rows = Json::array();
            for (Eigen::Index i = 0; i < g.rows(); ++i) {
                Json row = Json::array();
                for (Eigen::Index j = 0; j < g.cols(); ++j) {
                    row.push_back(g(i, j));
                }
                rows.push_back(std::move(row));
            }
            return rows;
        }

        Json run_kernel(const JobConfig& cfg) {
            const auto kernel = static_kernel(cfg);
            auto files_a = read_inputs(cfg.input);
            const auto paths_a = load_paths(files_a, cfg);
            std::optional<std::vector<InputFile>> files_b;
            std::vector<PiecewiseLinearPath> paths_b;
            if (!cfg.input_b.empty()) {
                files_b = read_inputs(cfg.input_b);
                paths_b = load_paths(*files_b, cfg);
            }

            Json result;
            result["kernel"] = kernel_meta(cfg);
            result["grid_lengths_a"] = grid_lengths(paths_a, cfg.refine);
            Eigen::MatrixXd g;
            if (files_b) {
                result["grid_lengths_b"] = grid_lengths(paths_b, cfg.refine);
                g = gram(paths_a, paths_b, kernel, cfg.refine);
            } else {
                g = gram(paths_a, kernel, cfg.refine);
                const auto psd = check_psd(g);
                result["psd"] = {{"min_eigenvalue", psd.min_eigenvalue},
                                 {"flagged", psd.status == PsdStatus::Flagged}};
            }
            if (g.rows() == 1 && g.cols() == 1) {
                result["value"] = g(0, 0);
            }
            result["gram"] = matrix_json(g);

            if (files_b) {
                files_a.insert(files_a.end(), files_b->begin(), files_b->end());
            }
            auto report = envelope(cfg, files_a);
            report["result"] = std::move(result);
            return report;
        }

        Json run_mmd(const JobConfig& cfg) {
            const auto kernel = static_kernel(cfg);
            auto files_p = read_inputs(cfg.input);
            const auto files_q = read_inputs(cfg.input_b);
            const auto p = load_paths(files_p, cfg);
            const auto q = load_paths(files_q, cfg);
            if (p.size() < 2 || q.size() < 2) {
                throw InputError("mmd needs at least two paths in each of --input and --input-b (got " +
                                 std::to_string(p.size()) + " and " + std::to_string(q.size()) + ")");
            }
            const double value = mmd2_unbiased(p, q, kernel, cfg.refine);

            files_p.insert(files_p.end(), files_q.begin(), files_q.end());
            auto report = envelope(cfg, files_p);
            Json result;
            result["kernel"] = kernel_meta(cfg);
            result["estimator"] = "unbiased";
            result["m"] = p.size();
            result["n"] = q.size();
            result["grid_lengths_a"] = grid_lengths(p, cfg.refine);
            result["grid_lengths_b"] = grid_lengths(q, cfg.refine);
            result["mmd2"] = value;
            report["result"] = std::move(result);
            return report;
        }

        Json run_demo_insider(const JobConfig& cfg) {
            const auto files = read_inputs(cfg.input);
            const auto& file = single(files, "--input");
            TickTable ticks;
            try {
                ticks = parse_ticks(file.contents, table_format(cfg), insider_labels());
            } catch (const InputError& e) {
                throw InputError(file.path.string() + ": " + e.what());
            }
            const auto path = embed_counting(ticks);
            const auto sig = signature(path, cfg.depth);

            auto report = envelope(cfg, files);
            Json result;
            Json labels;
            for (std::size_t i = 0; i < ticks.labels.size(); ++i) {
                labels[std::to_string(i + 1)] = ticks.labels[i];
            }
            result["labels"] = std::move(labels);
            result["ticks"] = ticks.events.size();
            result["score_word"] = "123";
            result["suspicion_score"] = cfg.depth >= 3 ? Json(sig.sig.at(std::string_view("123"))) : Json(nullptr);
            result["feature_count"] = sig.sig.size();
            result["features"] = word_map(sig.sig);
            report["result"] = std::move(result);
            return report;
        }

        void add_table_flags(CLI::App* sub, JobConfig& cfg) {
            sub->add_option("--delimiter", cfg.delimiter, "Cell delimiter")
                ->check(CLI::IsMember({"comma", "tab"}))
                ->capture_default_str();
            sub->add_flag("--header", cfg.header, "First non-blank line is a header");
        }

        void add_common(CLI::App* sub, JobConfig& cfg) {
            sub->add_option("--input", cfg.input, "Input file or directory")->required();
            sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
            sub->add_option("--format", cfg.format, "Report format")
                ->check(CLI::IsMember({"json"}))
                ->capture_default_str();
            add_table_flags(sub, cfg);
        }

        void add_embed_flags(CLI::App* sub, JobConfig& cfg) {
            sub->add_flag("--time-augment", cfg.time_augment, "Prepend time as channel 1");
            sub->add_option("--missing", cfg.missing, "Missing-value policy")
                ->check(CLI::IsMember({"ffill"}))
                ->capture_default_str();
        }

        void add_kernel_flags(CLI::App* sub, JobConfig& cfg) {
            sub->add_option("--kernel", cfg.kernel, "Static kernel")
                ->check(CLI::IsMember({"linear", "rbf"}))
                ->capture_default_str();
            sub->add_option("--sigma", cfg.sigma, "RBF bandwidth")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
            sub->add_option("--refine", cfg.refine, "Dyadic refinement level of the PDE grid")
                ->check(CLI::Range(0, 20))
                ->capture_default_str();
        }

    }  // namespace

    const std::vector<std::string>& insider_labels() {
        static const std::vector<std::string> labels{"call", "trade", "move"};
        return labels;
    }

    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
        JobConfig cfg;
        CLI::App app{"roughsig: signatures, log-signatures, log-ODE solves and signature kernels"};
        app.require_subcommand(1);
        app.set_version_flag("--version", std::string(ROUGHSIG_VERSION));

        auto* sig = app.add_subcommand("sig", "Truncated signature of a table");
        add_common(sig, cfg);
        add_embed_flags(sig, cfg);
        sig->add_option("--depth", cfg.depth, "Truncation depth")->check(CLI::Range(0, 64))->capture_default_str();
        sig->add_option("--verify", cfg.verify, "Previous sig report to compare against");

        auto* logsig = app.add_subcommand("logsig", "Log-signature in the Lyndon basis");
        add_common(logsig, cfg);
        add_embed_flags(logsig, cfg);
        logsig->add_option("--depth", cfg.depth, "Truncation depth")->check(CLI::Range(0, 64))->capture_default_str();

        auto* logode = app.add_subcommand("logode", "Solve a linear CDE driven by a table");
        add_common(logode, cfg);
        add_embed_flags(logode, cfg);
        logode->add_option("--depth", cfg.depth, "Log-signature depth per step")
            ->check(CLI::Range(1, 64))
            ->capture_default_str();
        logode->add_option("--field", cfg.field, "JSON linear vector field block")->required();
        logode->add_option("--steps", cfg.steps, "Uniform partition steps")
            ->check(CLI::Range(1, 1 << 24))
            ->capture_default_str();
        logode->add_option("--substeps", cfg.substeps, "RK4 substeps per step")
            ->check(CLI::Range(1, 1 << 20))
            ->capture_default_str();

        auto* kernel = app.add_subcommand("kernel", "Signature kernel / Gram matrix");
        add_common(kernel, cfg);
        add_embed_flags(kernel, cfg);
        add_kernel_flags(kernel, cfg);
        kernel->add_option("--input-b", cfg.input_b, "Second file or directory (default: --input against itself)");

        auto* mmd = app.add_subcommand("mmd", "Unbiased MMD^2 between two path samples");
        add_common(mmd, cfg);
        add_embed_flags(mmd, cfg);
        add_kernel_flags(mmd, cfg);
        mmd->add_option("--input-b", cfg.input_b, "Second sample directory")->required();

        auto* demo = app.add_subcommand("demo-insider", "Order-of-events score from call/trade/move ticks");
        add_common(demo, cfg);
        demo->add_option("--depth", cfg.depth, "Truncation depth")->check(CLI::Range(0, 16));

        std::vector<const char*> argv{"roughsig"};
        for (const auto& a : args) {
            argv.push_back(a.c_str());
        }
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kOk;
        } catch (const CLI::CallForVersion&) {
            out << ROUGHSIG_VERSION << "\n";
            return kOk;
        } catch (const CLI::ParseError& e) {
            // subcommand help comes through here too
            if (e.get_exit_code() == 0) {
                const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
                out << sub->help();
                return kOk;
            }
            err << "error: " << e.what() << "\n";
            return kBadInput;
        }

        cfg.command = app.get_subcommands().front()->get_name();
        if (cfg.command == "demo-insider" && demo->count("--depth") == 0) {
            cfg.depth = 3;
        }

        try {
            Json report;
            if (cfg.command == "sig") {
                report = run_sig(cfg);
            } else if (cfg.command == "logsig") {
                report = run_logsig(cfg);
            } else if (cfg.command == "logode") {
                report = run_logode(cfg);
            } else if (cfg.command == "kernel") {
                report = run_kernel(cfg);
            } else if (cfg.command == "mmd") {
                report = run_mmd(cfg);
            } else {
                report = run_demo_insider(cfg);
            }
            const auto text = report.dump(2) + "\n";
            if (cfg.output.empty()) {
                out << text;
            } else {
                std::ofstream file(cfg.output, std::ios::binary);
                if (!file || !(file << text)) {
                    throw InputError("--output: cannot write " + cfg.output);
                }
            }
            return kOk;
        } catch (const InputError& e) {
            err << "error: " << e.what() << "\n";
            return kBadInput;
        } catch (const std::exception& e) {
            err << "internal error: " << e.what() << "\n";
            return kInternalFailure;
        }
    }

}  // namespace roughsig::cli
