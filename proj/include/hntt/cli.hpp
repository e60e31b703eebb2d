/**************************************************************************
 * cli.hpp
 *
 * Copyright 2026 The hntt-watermark Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit status: 0 success, 1 usage/IO/validation error, 2 tamper detected.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hntt/attacks.hpp"
#include "hntt/engine.hpp"
#include "hntt/galois.hpp"
#include "hntt/imageio.hpp"
#include "hntt/pattern.hpp"
#include "hntt/transform.hpp"
#include "hntt/watermark.hpp"

namespace hntt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitTampered = 2;

/// Blocks/s of the reference hardware core: one block per cycle at 100 MHz.
inline constexpr double kReferenceBlocksPerSecond = 1e8;

namespace detail {

inline std::vector<long long> parse_int_list(std::string_view s, std::size_t expected,
                                             const char* what) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = std::min(s.find(',', pos), s.size());
        const std::string_view tok = s.substr(pos, comma - pos);
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
            throw std::invalid_argument(std::string(what) + ": bad integer '" + std::string(tok) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    if (out.size() != expected)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                    " comma-separated integers");
    return out;
}

inline WatermarkPattern load_pattern(const std::string& watermark_file, const std::string& pattern) {
    if (!watermark_file.empty())
        return load_watermark(watermark_file);
    if (pattern.empty() || pattern == "checker")
        return WatermarkPattern::checker();
    throw std::invalid_argument("unknown built-in pattern '" + pattern + "'");
}

inline void print_block(std::ostream& out, const GfBlock& b) {
    for (std::size_t r = 0; r < kBlockSize; ++r)
        out << int(b(r, 0)) << ' ' << int(b(r, 1)) << ' ' << int(b(r, 2)) << ' ' << int(b(r, 3)) << '\n';
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline int cmd_params(std::ostream& out, long long p_arg, const std::string& zeta_arg) {
    if (p_arg < 2 || p_arg > 46337)
        throw std::invalid_argument("params: p out of supported range");
    const auto p = static_cast<std::uint32_t>(p_arg);
    const auto z = parse_int_list(zeta_arg, 2, "--zeta");
    const GaussInt zeta(z[0], z[1], p);

    const bool prime = is_prime(p) && p != 2;
    const bool three_mod_four = p % 4 == 3;
    out << "p = " << p << '\n'
        << "zeta = " << zeta.re << " + j" << zeta.im << '\n'
        << "p odd prime: " << yes_no(prime) << '\n'
        << "p = 3 (mod 4): " << yes_no(three_mod_four) << '\n';
    if (!prime) {
        out << "valid: no\n";
        return kExitError;
    }
    const bool nonresidue = is_quadratic_nonresidue(GfElement(-1, p));
    const bool unimodular = is_unimodular(zeta);
    out << "-1 quadratic nonresidue: " << yes_no(nonresidue) << '\n'
        << "zeta unimodular: " << yes_no(unimodular) << '\n';
    if (!three_mod_four || !unimodular || zeta.is_zero()) {
        out << "valid: no\n";
        return kExitError;
    }
    const FieldParams fp = FieldParams::create(p, zeta);
    out << "N = " << fp.order_n() << '\n' << "valid: yes\n" << "cas =";
    for (const auto& c : cas_table(fp))
        out << ' ' << c;
    out << '\n';
    const HnttMatrix h = build_matrix(fp);
    out << "H" << h.size() << " =\n";
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t k = 0; k < h.size(); ++k)
            out << (k ? " " : "") << h(i, k);
        out << '\n';
    }
    out << "H*H = I: " << yes_no((h * h).is_identity()) << '\n';
    return kExitOk;
}

inline int cmd_transform(std::istream& in, std::ostream& out, bool full) {
    GfBlock a;
    for (std::size_t i = 0; i < kBlockCells; ++i) {
        long long v;
        if (!(in >> v))
            throw std::invalid_argument("transform: expected 16 integers on input");
        if (v < 0 || v > 2)
            throw std::invalid_argument("transform: value " + std::to_string(v) + " outside GF(3)");
        a.cells[i] = static_cast<std::uint8_t>(v);
    }
    // Both transforms are their own inverse over GF(3): H4*H4 = I and N^2 = 16 = 1.
    print_block(out, full ? full_hntt_2d(a) : special_hntt_2d(a));
    return kExitOk;
}

inline std::size_t default_workers() {
    return std::max(1u, std::thread::hardware_concurrency());
}

struct EmbedArgs {
    std::string input, output, watermark, pattern;
    bool pad = false;
    std::size_t workers = 0;
};

inline int cmd_embed(std::ostream& out, const EmbedArgs& a) {
    const GrayImage img = load_pgm(a.input);
    const WatermarkPattern w = load_pattern(a.watermark, a.pattern);
    auto [blocks, grid] = tile(img, a.pad);
    w.require_compatible(grid.blocks_x, grid.blocks_y);
    const auto marked = process_blocks(blocks, w, a.workers ? a.workers : default_workers());
    save_pgm(a.output, untile(marked, grid));
    out << "embedded " << grid.block_count() << " blocks into " << a.output << '\n';
    return kExitOk;
}

inline int cmd_extract(std::ostream& out, const std::string& original, const std::string& suspect,
                       const std::string& output) {
    const WatermarkPattern w = extract_image(load_pgm(original), load_pgm(suspect));
    save_watermark(output, w);
    out << "extracted " << w.blocks_x() << "x" << w.blocks_y() << " cells into " << output << '\n';
    return kExitOk;
}

struct VerifyArgs {
    std::string original, suspect, watermark, pattern, report;
    int threshold = 0;
};

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline int cmd_verify(std::ostream& out, const VerifyArgs& a) {
    const WatermarkPattern w = load_pattern(a.watermark, a.pattern);
    const TamperReport rep = verify(load_pgm(a.original), load_pgm(a.suspect), w, a.threshold);
    if (!a.report.empty())
        write_file(a.report, ends_with(a.report, ".json") ? rep.to_json().dump(2) + "\n" : rep.to_text());

    out << "grid " << rep.grid_width << "x" << rep.grid_height << ", threshold " << rep.threshold
        << ", tampered " << rep.total_tampered() << " of " << rep.distances.size() << " blocks\n";
    constexpr std::size_t kMaxListed = 20;
    std::size_t listed = 0;
    for (std::size_t b = 0; b < rep.tampered.size() && listed < kMaxListed; ++b) {
        if (!rep.tampered[b])
            continue;
        out << "  block " << b << " (x=" << b % rep.grid_width << ", y=" << b / rep.grid_width
            << ") distance " << rep.distances[b] << '\n';
        ++listed;
    }
    if (rep.total_tampered() > listed)
        out << "  ... " << rep.total_tampered() - listed << " more\n";
    return rep.total_tampered() == 0 ? kExitOk : kExitTampered;
}

struct AttackArgs {
    std::string input, output, type, rect, source;
    double probability = 0.01;
    int step = 1;
    int delta = 0;
    std::uint64_t seed = 0;
};

inline int cmd_attack(std::ostream& out, const AttackArgs& a) {
    const GrayImage img = load_pgm(a.input);
    AttackSpec spec;
    const auto kind = parse_attack_kind(a.type);
    if (!kind)
        throw std::invalid_argument("attack: unknown type '" + a.type + "'");
    spec.kind = *kind;
    spec.probability = a.probability;
    spec.step = a.step;
    spec.delta = a.delta;
    spec.seed = a.seed;
    if (spec.kind == AttackKind::region_replace) {
        if (a.rect.empty() || a.source.empty())
            throw std::invalid_argument("attack: region_replace requires --rect and --source");
        const auto r = parse_int_list(a.rect, 4, "--rect");
        if (std::any_of(r.begin(), r.end(), [](long long v) { return v < 0; }))
            throw std::invalid_argument("--rect: values must be non-negative");
        spec.rect = {static_cast<std::size_t>(r[0]), static_cast<std::size_t>(r[1]),
                     static_cast<std::size_t>(r[2]), static_cast<std::size_t>(r[3])};
        spec.source = load_pgm(a.source);
    }
    const GrayImage attacked = apply_attack(img, spec);
    save_pgm(a.output, attacked);
    out << "changed_pixels=" << count_changed(img, attacked) << '\n';
    return kExitOk;
}

inline int cmd_bench(std::ostream& out, std::size_t width, std::size_t height, std::size_t iters,
                     std::size_t workers, bool json) {
    const BenchResult r = benchmark(width, height, iters, workers ? workers : default_workers());
    const double reference_rate = equivalent_frame_rate(kReferenceBlocksPerSecond, width, height);
    if (json) {
        const nlohmann::json doc = {
            {"frame_width", r.frame_width},
            {"frame_height", r.frame_height},
            {"frame_blocks", r.frame_blocks},
            {"iterations", r.iterations},
            {"worker_count", r.worker_count},
            {"blocks_processed", r.blocks_processed},
            {"elapsed", r.elapsed},
            {"blocks_per_second", r.blocks_per_second},
            {"equivalent_frame_rate", r.equivalent_frame_rate},
            {"reference_blocks_per_second", kReferenceBlocksPerSecond},
            {"reference_frame_rate", reference_rate},
        };
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    out << std::left << std::fixed;
    out << std::setw(22) << "frame" << r.frame_width << "x" << r.frame_height << " (" << r.frame_blocks
        << " blocks)\n"
        << std::setw(22) << "iterations" << r.iterations << '\n'
        << std::setw(22) << "workers" << r.worker_count << '\n'
        << std::setw(22) << "blocks processed" << r.blocks_processed << '\n'
        << std::setw(22) << "elapsed" << std::setprecision(4) << r.elapsed << " s\n"
        << std::setw(22) << "blocks/s" << std::setprecision(0) << r.blocks_per_second << '\n'
        << std::setw(22) << "frame rate" << std::setprecision(2) << r.equivalent_frame_rate << " Hz\n"
        << std::setw(22) << "reference (1e8 blk/s)" << std::setprecision(2) << reference_rate << " Hz\n";
    return kExitOk;
}

} // namespace detail

/// Runs the tool with `args` (program name excluded).
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fragile watermarking with the 4x4 Hartley number-theoretic transform over GF(3)",
                 "hntt-wm"};
    app.require_subcommand(1);

    auto* params = app.add_subcommand("params", "Validate transform parameters and print H_N");
    long long p = 3;
    std::string zeta = "0,1";
    params->add_option("--p", p, "Field characteristic")->capture_default_str();
    params->add_option("--zeta", zeta, "zeta as RE,IM")->capture_default_str();

    auto* transform = app.add_subcommand("transform", "Transform a 4x4 GF(3) block read from stdin");
    bool inverse = false, full = false;
    transform->add_flag("--inverse", inverse, "Inverse transform (same map over GF(3))");
    transform->add_flag("--full", full, "Full 2-D HNTT instead of the special (separable) one");

    auto* embed = app.add_subcommand("embed", "Embed a watermark into a PGM image");
    detail::EmbedArgs ea;
    embed->add_option("--input", ea.input, "Input PGM")->required();
    embed->add_option("--output", ea.output, "Output PGM")->required();
    auto* e_wm = embed->add_option("--watermark", ea.watermark, "Watermark PGM (maxval 2)");
    embed->add_option("--pattern", ea.pattern, "Built-in pattern (checker)")->excludes(e_wm);
    embed->add_flag("--pad", ea.pad, "Allow dimensions that are not multiples of 4");
    embed->add_option("--workers", ea.workers, "Worker threads (default: all cores)");

    auto* extract = app.add_subcommand("extract", "Extract the watermark from a suspect image");
    std::string x_orig, x_susp, x_out;
    extract->add_option("--original", x_orig, "Original (unwatermarked) PGM")->required();
    extract->add_option("--suspect", x_susp, "Suspect PGM")->required();
    extract->add_option("--output", x_out, "Extracted watermark PGM")->required();

    auto* ver = app.add_subcommand("verify", "Locate tampered blocks");
    detail::VerifyArgs va;
    ver->add_option("--original", va.original, "Original (unwatermarked) PGM")->required();
    ver->add_option("--suspect", va.suspect, "Suspect PGM")->required();
    auto* v_wm = ver->add_option("--watermark", va.watermark, "Reference watermark PGM");
    ver->add_option("--pattern", va.pattern, "Built-in reference pattern (checker)")->excludes(v_wm);
    ver->add_option("--threshold", va.threshold, "Flag blocks with distance above this")
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--report", va.report, "Write report (.json for JSON, text otherwise)");

    auto* attack = app.add_subcommand("attack", "Apply a simulated tamper");
    detail::AttackArgs aa;
    attack->add_option("--input", aa.input, "Input PGM")->required();
    attack->add_option("--output", aa.output, "Output PGM")->required();
    attack->add_option("--type", aa.type, "lsb_flip | quantize | region_replace | intensity_shift")
        ->required();
    attack->add_option("--prob", aa.probability, "lsb_flip probability")->check(CLI::Range(0.0, 1.0));
    attack->add_option("--step", aa.step, "quantize step")->check(CLI::PositiveNumber);
    attack->add_option("--delta", aa.delta, "intensity_shift delta");
    attack->add_option("--rect", aa.rect, "region_replace rectangle X,Y,W,H");
    attack->add_option("--source", aa.source, "region_replace source PGM (W x H)");
    attack->add_option("--seed", aa.seed, "lsb_flip seed");

    auto* bench = app.add_subcommand("bench", "Measure block throughput");
    std::size_t bw = 4096, bh = 4096, iters = 3, workers = 0;
    bool json = false;
    bench->add_option("--width", bw, "Frame width")->capture_default_str();
    bench->add_option("--height", bh, "Frame height")->capture_default_str();
    bench->add_option("--iters", iters, "Frames to process")->capture_default_str();
    bench->add_option("--workers", workers, "Worker threads (default: all cores)");
    bench->add_flag("--json", json, "Print a JSON document");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (params->parsed())
            return detail::cmd_params(out, p, zeta);
        if (transform->parsed())
            return detail::cmd_transform(in, out, full);
        if (embed->parsed())
            return detail::cmd_embed(out, ea);
        if (extract->parsed())
            return detail::cmd_extract(out, x_orig, x_susp, x_out);
        if (ver->parsed())
            return detail::cmd_verify(out, va);
        if (attack->parsed())
            return detail::cmd_attack(out, aa);
        if (bench->parsed())
            return detail::cmd_bench(out, bw, bh, iters, workers, json);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

} // namespace hntt::cli
