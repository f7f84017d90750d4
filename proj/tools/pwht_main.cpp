// Command-line front end for the polar Walsh-Hadamard image processing
// library: transforms, basis-function figures, polar conversions, noise
// synthesis, banding removal, spectrum diagnostics, and quality metrics.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pwht/convert.hpp"
#include "pwht/filter.hpp"
#include "pwht/geometry.hpp"
#include "pwht/imgio.hpp"
#include "pwht/metrics.hpp"
#include "pwht/noise.hpp"
#include "pwht/transform.hpp"

namespace {

// Flag/consistency problems found after parsing; mapped to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SharedOptions {
    std::size_t n1 = 256;
    std::size_t n2 = 512;
    std::string measure = "area";
    std::uint64_t shots = 0;  // 0 selects the exact measurement model
    std::uint64_t seed = 0;
    double epsilon = 1.0;
};

void add_grid_flags(CLI::App* cmd, SharedOptions& opts) {
    cmd->add_option("--n1", opts.n1, "radial sector count (power of two)")
        ->capture_default_str();
    cmd->add_option("--n2", opts.n2, "angular sector count (power of two)")
        ->capture_default_str();
    cmd->add_option("--measure", opts.measure, "ring spacing: area or radial")
        ->check(CLI::IsMember({"area", "radial"}))
        ->capture_default_str();
}

void add_hybrid_flags(CLI::App* cmd, SharedOptions& opts) {
    cmd->add_option("--shots", opts.shots,
                    "measurement shots per transform (0 = exact probabilities)")
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "measurement sampling seed")
        ->capture_default_str();
    cmd->add_option("--epsilon", opts.epsilon, "positive shift constant")
        ->capture_default_str();
}

void require_power_of_two(std::size_t value, const std::string& name) {
    if (value < 2 || (value & (value - 1)) != 0)
        throw UsageError(name + " must be a power of two >= 2");
}

pwht::MeasureKind parse_measure(const std::string& measure) {
    return measure == "radial" ? pwht::MeasureKind::UniformRadial
                               : pwht::MeasureKind::UniformArea;
}

pwht::HybridConfig hybrid_config(const SharedOptions& opts) {
    if (!(opts.epsilon > 0.0))
        throw UsageError("--epsilon must be positive");
    pwht::HybridConfig cfg;
    cfg.epsilon = opts.epsilon;
    if (opts.shots > 0)
        cfg.model = pwht::MeasurementModel::shots(opts.shots, opts.seed);
    return cfg;
}

std::vector<double> read_vector(const std::string& path) {
    std::vector<double> values;
    const auto drain = [&values](std::istream& in) {
        double v = 0.0;
        while (in >> v) values.push_back(v);
        if (!in.eof())
            throw std::runtime_error("vector input contains non-numeric data");
    };
    if (path == "-") {
        drain(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error(path + ": cannot open file");
        drain(in);
    }
    if (values.empty()) throw std::runtime_error("vector input is empty");
    return values;
}

void write_values(const std::string& path, const std::vector<double>& values) {
    const auto emit = [&values](std::ostream& out) {
        char buf[64];
        for (double v : values) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << buf << '\n';
        }
    };
    if (path == "-") {
        emit(std::cout);
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error(path + ": cannot open file for writing");
        emit(out);
    }
}

void write_matrix_text(const std::string& path, const pwht::Matrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    char buf[64];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            out << buf << (j + 1 < m.cols() ? " " : "");
        }
        out << '\n';
    }
}

void print_field(const char* key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    std::cout << key << '=' << buf << '\n';
}

pwht::PgmFormat pgm_format(bool ascii) {
    return ascii ? pwht::PgmFormat::P2 : pwht::PgmFormat::P5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polar Walsh-Hadamard image processing"};
    app.require_subcommand(1);

    // ---- transform ----
    auto* transform = app.add_subcommand(
        "transform", "Walsh-Hadamard transform of a vector (or a PGM with --image)");
    {
        auto state = std::make_shared<SharedOptions>();
        auto input = std::make_shared<std::string>("-");
        auto output = std::make_shared<std::string>("-");
        auto order = std::make_shared<std::string>("sequency");
        auto image = std::make_shared<bool>(false);
        transform->add_option("input", *input, "vector file, or - for the input stream")
            ->capture_default_str();
        transform->add_option("output", *output, "output file, or - for the output stream")
            ->capture_default_str();
        transform->add_option("--order", *order, "natural or sequency")
            ->check(CLI::IsMember({"natural", "sequency"}))
            ->capture_default_str();
        transform->add_flag("--image", *image, "treat input as a PGM and transform it in 2D");
        add_hybrid_flags(transform, *state);
        transform->callback([state, input, output, order, image] {
            if (*image) {
                if (*input == "-" || *output == "-")
                    throw UsageError("--image requires explicit input and output paths");
                const pwht::CartesianImage img = pwht::read_pgm(*input);
                write_matrix_text(*output, pwht::wht2d(img, hybrid_config(*state)));
                return;
            }
            const std::vector<double> values = read_vector(*input);
            if (*order == "natural")
                write_values(*output, pwht::fwht_natural(values));
            else
                write_values(*output, pwht::hybrid_wht(values, hybrid_config(*state)));
        });
    }

    // ---- basis ----
    auto* basis = app.add_subcommand("basis", "render a polar Walsh basis function to a PGM");
    {
        auto state = std::make_shared<SharedOptions>();
        state->n1 = 4;
        state->n2 = 4;
        auto output = std::make_shared<std::string>();
        auto j = std::make_shared<std::size_t>(0);
        auto p = std::make_shared<std::size_t>(0);
        auto order = std::make_shared<std::string>("natural");
        auto size = std::make_shared<std::size_t>(256);
        auto ascii = std::make_shared<bool>(false);
        basis->add_option("output", *output, "output PGM path")->required();
        basis->add_option("--j", *j, "radial basis index")->capture_default_str();
        basis->add_option("--p", *p, "angular basis index")->capture_default_str();
        basis->add_option("--order", *order, "natural or sequency")
            ->check(CLI::IsMember({"natural", "sequency"}))
            ->capture_default_str();
        basis->add_option("--size", *size, "output raster size in pixels")
            ->capture_default_str();
        basis->add_flag("--ascii", *ascii, "write P2 instead of P5");
        add_grid_flags(basis, *state);
        basis->callback([state, output, j, p, order, size, ascii] {
            require_power_of_two(state->n1, "--n1");
            require_power_of_two(state->n2, "--n2");
            if (*size < 2) throw UsageError("--size must be at least 2");
            if (*j >= state->n1 || *p >= state->n2)
                throw UsageError("--j/--p must lie inside the grid");
            const pwht::PolarGrid grid{state->n1, state->n2,
                                       static_cast<double>(*size / 2),
                                       parse_measure(state->measure)};
            const auto ord = *order == "sequency" ? pwht::TransformOrder::Sequency
                                                  : pwht::TransformOrder::Natural;
            pwht::write_pgm(pwht::render_basis(grid, *j, *p, ord, *size), *output,
                            pgm_format(*ascii));
        });
    }

    // ---- to-polar ----
    auto* to_polar = app.add_subcommand("to-polar", "resample a PGM onto a polar grid");
    {
        auto state = std::make_shared<SharedOptions>();
        auto input = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        to_polar->add_option("input", *input, "input PGM path")->required();
        to_polar->add_option("output", *output, "output polar-matrix path")->required();
        add_grid_flags(to_polar, *state);
        to_polar->callback([state, input, output] {
            require_power_of_two(state->n1, "--n1");
            require_power_of_two(state->n2, "--n2");
            const pwht::CartesianImage img = pwht::read_pgm(*input);
            pwht::write_polar(pwht::cartesian_to_polar(img, state->n1, state->n2,
                                                       parse_measure(state->measure)),
                              *output);
        });
    }

    // ---- to-cartesian ----
    auto* to_cartesian =
        app.add_subcommand("to-cartesian", "paint a polar matrix back into a PGM");
    {
        auto input = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        auto rows = std::make_shared<std::size_t>(0);
        auto cols = std::make_shared<std::size_t>(0);
        auto ascii = std::make_shared<bool>(false);
        to_cartesian->add_option("input", *input, "input polar-matrix path")->required();
        to_cartesian->add_option("output", *output, "output PGM path")->required();
        to_cartesian->add_option("--rows", *rows, "output rows (default 2*r_max)");
        to_cartesian->add_option("--cols", *cols, "output columns (default 2*r_max)");
        to_cartesian->add_flag("--ascii", *ascii, "write P2 instead of P5");
        to_cartesian->callback([input, output, rows, cols, ascii] {
            const pwht::PolarImage pimg = pwht::read_polar(*input);
            const auto implied = static_cast<std::size_t>(2.0 * pimg.grid.r_max);
            const std::size_t out_rows = *rows ? *rows : implied;
            const std::size_t out_cols = *cols ? *cols : implied;
            pwht::write_pgm(pwht::polar_to_cartesian(pimg, out_rows, out_cols), *output,
                            pgm_format(*ascii));
        });
    }

    // ---- gen-noise ----
    auto* gen_noise = app.add_subcommand("gen-noise", "synthesize banding or Airy noise");
    {
        auto state = std::make_shared<SharedOptions>();
        auto output = std::make_shared<std::string>();
        auto type = std::make_shared<std::string>("circular");
        auto period = std::make_shared<std::size_t>(8);
        auto amplitude = std::make_shared<double>(40.0);
        auto size = std::make_shared<std::size_t>(512);
        auto ka = std::make_shared<double>(2.0 * 3.14159265358979323846);
        auto i0 = std::make_shared<double>(255.0);
        auto enhance = std::make_shared<double>(1.0);
        auto polar_out = std::make_shared<bool>(false);
        auto ascii = std::make_shared<bool>(false);
        gen_noise
            ->add_option("output", *output, "output path (PGM, or polar matrix with --polar)")
            ->required();
        gen_noise->add_option("--type", *type, "circular, azimuthal, or airy")
            ->check(CLI::IsMember({"circular", "azimuthal", "airy"}))
            ->capture_default_str();
        gen_noise->add_option("--period", *period, "band period in sectors")
            ->capture_default_str();
        gen_noise->add_option("--amplitude", *amplitude, "band amplitude z")
            ->capture_default_str();
        gen_noise->add_option("--size", *size, "output raster size in pixels")
            ->capture_default_str();
        gen_noise->add_option("--ka", *ka, "wave number times aperture radius")
            ->capture_default_str();
        gen_noise->add_option("--i0", *i0, "peak intensity")->capture_default_str();
        gen_noise->add_option("--enhance", *enhance, "outer-ring brightness exponent (>= 1)")
            ->capture_default_str();
        gen_noise->add_flag("--polar", *polar_out,
                            "write the polar band matrix instead of a PGM");
        gen_noise->add_flag("--ascii", *ascii, "write P2 instead of P5");
        add_grid_flags(gen_noise, *state);
        gen_noise->callback([state, output, type, period, amplitude, size, ka, i0, enhance,
                             polar_out, ascii] {
            if (*size < 2) throw UsageError("--size must be at least 2");
            if (*type == "airy") {
                if (*polar_out) throw UsageError("--polar applies only to banding noise");
                pwht::write_pgm(pwht::render_airy(*size, *ka, *i0, *enhance), *output,
                                pgm_format(*ascii));
                return;
            }
            require_power_of_two(state->n1, "--n1");
            require_power_of_two(state->n2, "--n2");
            const pwht::MeasureKind measure = parse_measure(state->measure);
            const pwht::PolarGrid grid{state->n1, state->n2,
                                       static_cast<double>(*size / 2), measure};
            const pwht::NoiseSpec spec =
                *type == "circular"
                    ? pwht::NoiseSpec{pwht::CircularBands{*period, *amplitude, measure}}
                    : pwht::NoiseSpec{pwht::AzimuthalBands{*period, *amplitude}};
            const pwht::PolarImage band = pwht::gen_banding_polar(grid, spec);
            if (*polar_out)
                pwht::write_polar(band, *output);
            else
                pwht::write_pgm(pwht::polar_to_cartesian(band, *size, *size), *output,
                                pgm_format(*ascii));
        });
    }

    // ---- add-noise ----
    auto* add = app.add_subcommand("add-noise", "pixelwise sum of an image and a noise image");
    {
        auto image = std::make_shared<std::string>();
        auto noise = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        auto no_clamp = std::make_shared<bool>(false);
        auto ascii = std::make_shared<bool>(false);
        add->add_option("image", *image, "input PGM path")->required();
        add->add_option("noise", *noise, "noise PGM path")->required();
        add->add_option("output", *output, "output PGM path")->required();
        add->add_flag("--no-clamp", *no_clamp, "skip clipping to [0, 255]");
        add->add_flag("--ascii", *ascii, "write P2 instead of P5");
        add->callback([image, noise, output, no_clamp, ascii] {
            const pwht::CartesianImage img = pwht::read_pgm(*image);
            const pwht::CartesianImage noise_img = pwht::read_pgm(*noise);
            pwht::write_pgm(pwht::add_noise(img, noise_img, !*no_clamp), *output,
                            pgm_format(*ascii));
        });
    }

    // ---- denoise ----
    auto* denoise = app.add_subcommand("denoise", "remove circular/azimuthal banding noise");
    {
        auto state = std::make_shared<SharedOptions>();
        auto input = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        auto cflag = std::make_shared<bool>(false);
        auto aflag = std::make_shared<bool>(false);
        auto ascii = std::make_shared<bool>(false);
        denoise->add_option("input", *input, "noisy PGM path")->required();
        denoise->add_option("output", *output, "filtered PGM path")->required();
        denoise->add_flag("--cflag", *cflag, "remove circular banding noise");
        denoise->add_flag("--aflag", *aflag, "remove azimuthal banding noise");
        denoise->add_flag("--ascii", *ascii, "write P2 instead of P5");
        add_grid_flags(denoise, *state);
        add_hybrid_flags(denoise, *state);
        denoise->callback([state, input, output, cflag, aflag, ascii] {
            require_power_of_two(state->n1, "--n1");
            require_power_of_two(state->n2, "--n2");
            pwht::FilterRequest req;
            req.ring_count = state->n1;
            req.sector_count = state->n2;
            req.measure = parse_measure(state->measure);
            req.remove_circular = *cflag;
            req.remove_azimuthal = *aflag;
            req.hybrid = hybrid_config(*state);
            const pwht::CartesianImage img = pwht::read_pgm(*input);
            pwht::write_pgm(pwht::remove_banding(img, req), *output, pgm_format(*ascii));
        });
    }

    // ---- spectrum ----
    auto* spectrum = app.add_subcommand(
        "spectrum", "transform-domain energy summary of the polar representation");
    {
        auto state = std::make_shared<SharedOptions>();
        auto input = std::make_shared<std::string>();
        auto out_matrix = std::make_shared<std::string>();
        spectrum->add_option("input", *input, "input PGM path")->required();
        spectrum->add_option("--out", *out_matrix, "also write the spectrum matrix as text");
        add_grid_flags(spectrum, *state);
        add_hybrid_flags(spectrum, *state);
        spectrum->callback([state, input, out_matrix] {
            require_power_of_two(state->n1, "--n1");
            require_power_of_two(state->n2, "--n2");
            pwht::FilterRequest req;
            req.ring_count = state->n1;
            req.sector_count = state->n2;
            req.measure = parse_measure(state->measure);
            req.hybrid = hybrid_config(*state);
            const pwht::SpectrumReport report =
                pwht::spectrum_report(pwht::read_pgm(*input), req);
            print_field("dc", report.dc);
            print_field("off_dc_energy", report.off_dc_energy);
            print_field("column0_fraction", report.column0_fraction);
            print_field("row0_fraction", report.row0_fraction);
            if (!out_matrix->empty()) write_matrix_text(*out_matrix, report.spectrum);
        });
    }

    // ---- metrics ----
    auto* metrics = app.add_subcommand("metrics", "MSE / PSNR / SSIM of two PGM images");
    {
        auto first = std::make_shared<std::string>();
        auto second = std::make_shared<std::string>();
        auto peak = std::make_shared<int>(255);
        auto masked = std::make_shared<bool>(false);
        metrics->add_option("a", *first, "reference PGM path")->required();
        metrics->add_option("b", *second, "comparison PGM path")->required();
        metrics->add_option("--peak", *peak, "PSNR peak value")
            ->check(CLI::IsMember({255, 512}))
            ->capture_default_str();
        metrics->add_flag("--disk-mask", *masked,
                          "restrict MSE/PSNR to the inscribed open disk");
        metrics->callback([first, second, peak, masked] {
            const pwht::CartesianImage a = pwht::read_pgm(*first);
            const pwht::CartesianImage b = pwht::read_pgm(*second);
            std::optional<pwht::Matrix> mask;
            if (*masked) mask = pwht::disk_mask(a.rows(), a.cols());
            const pwht::QualityReport report = pwht::compare_images(
                a, b, static_cast<double>(*peak), mask ? &*mask : nullptr);
            std::cout << pwht::format_report(report);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
