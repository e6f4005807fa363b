// hklat: command line front end for the lattice toolkit. Every subcommand
// prints one JSON document on stdout; errors go to stderr as
// {"error": kind, "message": text}.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hklat/cones.hpp"
#include "hklat/ideal.hpp"
#include "hklat/io.hpp"
#include "hklat/isotropy.hpp"
#include "hklat/navigator.hpp"
#include "hklat/reflections.hpp"

namespace {

using hklat::io::json;

constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitRejected = 1;

hklat::VectorQ parse_vector(const std::string& text) {
  try {
    return hklat::io::vector_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw hklat::Error(hklat::ErrorKind::kParse, "bad vector '" + text + "': " + e.what());
  }
}

hklat::Lattice load_lattice(const std::string& path) {
  return hklat::io::lattice_from_json(hklat::io::read_json_file(path));
}

std::vector<hklat::Wall> load_walls(const hklat::Lattice& lat, const std::string& path) {
  json j = hklat::io::read_json_file(path);
  if (j.is_object() && j.contains("walls")) j = j.at("walls");
  std::vector<hklat::Wall> walls;
  for (const auto& w : j) walls.emplace_back(lat, hklat::io::vector_from_json(w));
  return walls;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string lattice_path, descriptor_path, cert_path, out_path, walls_path, poly_path;
  std::string family = "K3";
  std::string h, v, alpha, ray_h, ray_l;
  int n = 0, degree = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
};

int run(CLI::App& app, const Options& o) {
  using namespace hklat;

  if (app.got_subcommand("lattice")) {
    auto* cmd = app.get_subcommand("lattice");
    if (cmd->got_subcommand("builtin")) {
      LatticeFamily family = LatticeFamily::kK3;
      if (o.family == "K3_hilb") family = LatticeFamily::kK3Hilb;
      else if (o.family == "kummer") family = LatticeFamily::kKummer;
      else if (o.family != "K3") throw Error(ErrorKind::kParameter, "family must be K3, K3_hilb or kummer");
      print(io::to_json(builtin_lattice(family, o.n)));
    } else {
      const Lattice lat = load_lattice(o.lattice_path);
      const auto& s = lat.signature();
      print({{"rank", lat.rank()},
             {"signature", {s.positive, s.negative, s.zero}},
             {"determinant", format_rational(lat.determinant())},
             {"even", lat.is_even()}});
    }
    return 0;
  }

  if (app.got_subcommand("isotropic")) {
    const Lattice lat = load_lattice(o.lattice_path);
    const IsotropySearch search = find_isotropic_vector(lat);
    print({{"isotropic", search.witness.has_value()},
           {"witness", search.witness ? io::to_json(search.witness->vector) : json(nullptr)},
           {"bound_used", search.bound_used}});
    return 0;
  }

  if (app.got_subcommand("cone")) {
    auto* cmd = app.get_subcommand("cone");
    const Lattice lat = load_lattice(o.lattice_path);
    if (cmd->got_subcommand("classify")) {
      const auto c = classify(lat, parse_vector(o.h), parse_vector(o.v));
      print({{"classification", to_string(c.region)},
             {"pairing_sign", c.pairing_sign},
             {"in_closed_component", c.in_closed_component()}});
    } else if (cmd->got_subcommand("sample")) {
      json out = json::array();
      for (const auto& g : sample_boundary_stream(lat, parse_vector(o.alpha), parse_vector(o.h), o.count, o.seed)) {
        out.push_back(io::to_json(g));
      }
      print({{"samples", out}});
    } else {
      json roots = json::array();
      for (const auto& r : boundary_ray(lat, parse_vector(o.ray_h), parse_vector(o.ray_l))) {
        roots.push_back({{"root", io::to_json(r.root)},
                         {"class", io::to_json(r.point)},
                         {"in_component", r.in_component}});
      }
      print({{"roots", roots}});
    }
    return 0;
  }

  if (app.got_subcommand("reflect")) {
    const Lattice lat = load_lattice(o.lattice_path);
    const auto walls = load_walls(lat, o.walls_path);
    const WalkResult walk = walk_to_bk_cone(lat, walls, parse_vector(o.h), parse_vector(o.alpha));
    json trace = json::array();
    for (const auto& t : walk.trace) trace.push_back(format_rational(t));
    print({{"beta", io::to_json(walk.beta)}, {"word", walk.word}, {"trace", trace}});
    return 0;
  }

  if (app.got_subcommand("ideal")) {
    auto* cmd = app.get_subcommand("ideal");
    const Lattice lat = load_lattice(o.lattice_path);
    if (cmd->got_subcommand("basis")) {
      const IdealBasis basis = ideal_basis(lat, o.n, o.degree, o.seed);
      json gens = json::array();
      for (const auto& g : basis.generators()) gens.push_back(io::to_json(g));
      print({{"degree", basis.degree()},
             {"dimension", basis.dimension()},
             {"target_dimension", basis.target_dimension().str()},
             {"samples_used", basis.samples_used()},
             {"warnings", basis.warnings()},
             {"generators", gens}});
    } else {
      const PolynomialQ p = io::polynomial_from_json(io::read_json_file(o.poly_path));
      const int degree = p.degree().value_or(o.n + 1);
      const IdealBasis basis = ideal_basis(lat, o.n, degree, o.seed);
      print({{"member", contains(basis, p)}, {"degree", degree}});
    }
    return 0;
  }

  if (app.got_subcommand("wsp")) {
    auto* cmd = app.get_subcommand("wsp");
    VarietyDescriptor desc = [&] {
      try {
        return io::descriptor_from_json(io::read_json_file(o.descriptor_path));
      } catch (const Error& e) {
        // Unparseable or degenerate descriptors are invalid input too.
        std::cerr << json{{"error", "invalid_input"}, {"message", e.what()}}.dump() << "\n";
        throw;
      }
    }();
    if (cmd->got_subcommand("check")) {
      const Certificate cert = check_wsp(desc);
      const json out = io::to_json(cert);
      if (!o.out_path.empty()) io::write_json_file(o.out_path, out);
      print(out);
      return exit_code(cert.verdict);
    }
    const Certificate cert = io::certificate_from_json(io::read_json_file(o.cert_path));
    const VerificationReport report = verify_certificate(desc, cert);
    print({{"verified", report.ok}, {"diagnoses", report.diagnoses}});
    return report.ok ? 0 : kExitRejected;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice toolkit for Beauville-Bogomolov forms"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto* lattice = app.add_subcommand("lattice", "Lattice catalog and invariants");
  lattice->require_subcommand(1);
  auto* builtin = lattice->add_subcommand("builtin", "Print a standard H^2 lattice");
  builtin->add_option("family", o.family, "K3, K3_hilb or kummer")->required();
  builtin->add_option("--n", o.n, "Parameter n for K3_hilb and kummer");
  lattice->add_subcommand("info", "Rank, signature, determinant")
      ->add_option("lattice", o.lattice_path)->required();

  auto* isotropic = app.add_subcommand("isotropic", "Isotropic vectors");
  isotropic->require_subcommand(1);
  isotropic->add_subcommand("find", "Find a primitive isotropic vector")
      ->add_option("lattice", o.lattice_path)->required();

  auto* cone = app.add_subcommand("cone", "Positive cone operations");
  cone->require_subcommand(1);
  auto* classify = cone->add_subcommand("classify", "Classify v relative to h's positive cone");
  classify->add_option("lattice", o.lattice_path)->required();
  classify->add_option("--h", o.h, "Reference class, JSON array")->required();
  classify->add_option("--v", o.v, "Class to classify, JSON array")->required();
  auto* sample = cone->add_subcommand("sample", "Sample rational boundary classes");
  sample->add_option("lattice", o.lattice_path)->required();
  sample->add_option("--alpha", o.alpha, "Isotropic seed class")->required();
  sample->add_option("--h", o.h, "Reference class")->required();
  sample->add_option("--count", o.count, "Number of samples")->default_val(1);
  sample->add_option("--seed", o.seed, "RNG seed")->default_val(0);
  auto* ray = cone->add_subcommand("ray", "Boundary points on (1-r)H + rL");
  ray->add_option("lattice", o.lattice_path)->required();
  ray->add_option("--H", o.ray_h, "Positive class H")->required();
  ray->add_option("--L", o.ray_l, "Rational class L")->required();

  auto* reflect = app.add_subcommand("reflect", "Reflections in prime exceptional classes");
  reflect->require_subcommand(1);
  auto* walk = reflect->add_subcommand("walk", "Walk alpha into the closed birational Kahler cone");
  walk->add_option("lattice", o.lattice_path)->required();
  walk->add_option("--walls", o.walls_path, "JSON file with a list of wall classes")->required();
  walk->add_option("--h", o.h, "Ample class")->required();
  walk->add_option("--alpha", o.alpha, "Class to move")->required();

  auto* ideal = app.add_subcommand("ideal", "Kernel ideal of isotropic powers");
  ideal->require_subcommand(1);
  auto* basis = ideal->add_subcommand("basis", "Basis of the degree-K piece");
  basis->add_option("lattice", o.lattice_path)->required();
  basis->add_option("--n", o.n, "Half dimension n")->required();
  basis->add_option("--degree", o.degree, "Degree K")->required();
  basis->add_option("--seed", o.seed, "RNG seed")->default_val(0);
  auto* member = ideal->add_subcommand("member", "Membership of a homogeneous polynomial");
  member->add_option("lattice", o.lattice_path)->required();
  member->add_option("--n", o.n, "Half dimension n")->required();
  member->add_option("--poly", o.poly_path, "Polynomial JSON file")->required();
  member->add_option("--seed", o.seed, "RNG seed")->default_val(0);

  auto* wsp = app.add_subcommand("wsp", "Weak splitting property navigator");
  wsp->require_subcommand(1);
  auto* check = wsp->add_subcommand("check", "Decide and certify");
  check->add_option("descriptor", o.descriptor_path)->required();
  check->add_option("--out", o.out_path, "Also write the certificate here");
  auto* verify = wsp->add_subcommand("verify", "Replay a certificate");
  verify->add_option("descriptor", o.descriptor_path)->required();
  verify->add_option("certificate", o.cert_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    return run(app, o);
  } catch (const hklat::Error& e) {
    if (e.kind() == hklat::ErrorKind::kInternal) {
      std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
      return kExitInternal;
    }
    std::cerr << json{{"error", std::string(hklat::to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "invalid_input"}, {"message", e.what()}}.dump() << "\n";
    return kExitInvalidInput;
  }
}
