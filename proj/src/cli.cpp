#include "asmpoly/cli.hpp"

#include "asmpoly/decomposition.hpp"
#include "asmpoly/enumeration.hpp"
#include "asmpoly/face_lattice.hpp"
#include "asmpoly/membership.hpp"
#include "asmpoly/permutohedron.hpp"
#include "asmpoly/text_format.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

namespace asmpoly::cli {
namespace {

struct Io {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;

  [[nodiscard]] std::string slurp(const std::string &path) const {
    if (path == "-")
      return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file)
      throw ParseError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }
};

// Thrown by handlers that want exit status 1 after printing their verdict.
struct Rejected {
  int status = kExitRejected;
};

AsmMatrix read_asm(const Io &io, const std::string &path) {
  return validate_asm(parse_matrix(io.slurp(path)));
}

std::vector<AsmMatrix> read_asms(const Io &io, const std::vector<std::string> &paths) {
  std::vector<AsmMatrix> out;
  for (const auto &p : paths)
    for (const auto &m : parse_matrices(io.slurp(p)))
      out.push_back(validate_asm(m));
  return out;
}

std::string facet_line(const FacetDescriptor &d) {
  return family_name(d.family) + " " + std::to_string(d.i) + " " + std::to_string(d.j);
}

void print_face(const Io &io, const AsmPolytope &p, const Face &f, const std::string &format) {
  io.out << "dimension " << f.dimension << "\n";
  io.out << "vertices " << f.vertex_ids.size() << "\n";
  if (format == "grid") {
    io.out << format_grid(f.grid);
  } else {
    for (const auto &a : p.vertices_of(f))
      io.out << format_matrix(a);
  }
}

void predicate(const Io &io, bool value) {
  io.out << (value ? "true" : "false") << "\n";
  if (!value)
    throw Rejected{};
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  Io io{in, out, err};
  CLI::App app{"Alternating sign matrix polytope toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::size_t order = 0;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::string format = "matrix";
  std::string facet_format = "summary";
  std::string file, file2;
  std::vector<std::string> files;
  bool checksum = false;
  bool stats = false;
  std::function<void()> action;

  auto add_cap = [&](CLI::App *sub) {
    sub->add_option("--cap", cap, "Largest order to enumerate (max 7)")
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"matrix", "grid"}))
        ->capture_default_str();
  };

  auto *count = app.add_subcommand("count", "Number of n x n ASMs");
  count->add_option("n", order)->required()->check(CLI::PositiveNumber);
  count->callback([&] { action = [&] { io.out << count_asms(order).get_str() << "\n"; }; });

  auto *enumerate = app.add_subcommand("enumerate", "List all n x n ASMs");
  enumerate->add_option("n", order)->required()->check(CLI::PositiveNumber);
  add_cap(enumerate);
  add_format(enumerate);
  enumerate->callback([&] {
    action = [&] {
      bool first = true;
      for (const auto &a : enumerate_asms(order, cap)) {
        if (!first)
          io.out << "\n";
        first = false;
        io.out << (format == "grid" ? format_grid(asm_to_grid(a).grid()) : format_matrix(a));
      }
    };
  });

  auto *validate = app.add_subcommand("validate", "Check the ASM conditions");
  validate->add_option("file", file)->required();
  validate->callback([&] {
    action = [&] {
      const auto m = parse_matrix(io.slurp(file));
      try {
        validate_asm(m);
      } catch (const InvalidAsm &e) {
        io.out << "invalid: " << e.what() << "\n";
        throw Rejected{};
      }
      io.out << "valid\n";
    };
  });

  auto *membership = app.add_subcommand("membership", "Test membership in ASM_n");
  membership->add_option("file", file)->required();
  membership->callback([&] {
    action = [&] {
      const auto verdict = check_membership(parse_matrix(io.slurp(file)));
      if (verdict.member()) {
        io.out << "member\n";
      } else {
        io.out << "not member: " << verdict.violated->describe() << "\n";
        throw Rejected{};
      }
    };
  });

  auto *decomp = app.add_subcommand("decompose", "Write a member as a convex combination of ASMs");
  decomp->add_option("file", file)->required();
  decomp->add_flag("--checksum", checksum, "Append the recombined matrix");
  decomp->add_flag("--stats", stats, "Report split counts on stderr");
  decomp->callback([&] {
    action = [&] {
      DecompositionStats s;
      ConvexCombination c;
      try {
        c = decompose(parse_matrix(io.slurp(file)), &s);
      } catch (const NotAMember &e) {
        io.err << e.what() << "\n";
        throw Rejected{};
      }
      io.out << format_decomposition(c, checksum);
      if (stats)
        io.err << "terms " << c.size() << " splits " << s.splits << " depth " << s.max_depth
               << "\n";
    };
  });

  auto *recombine = app.add_subcommand("recombine", "Sum a decomposition back into a matrix");
  recombine->add_option("file", file)->required();
  recombine->callback([&] {
    action = [&] { io.out << format_matrix(parse_decomposition(io.slurp(file)).recombine()); };
  });

  auto *to_grid = app.add_subcommand("to-grid", "Simple flow grid of an ASM");
  to_grid->add_option("file", file)->required();
  to_grid->callback([&] {
    action = [&] {
      try {
        io.out << format_grid(asm_to_grid(read_asm(io, file)).grid());
      } catch (const InvalidAsm &e) {
        io.err << "not an ASM: " << e.what() << "\n";
        throw Rejected{};
      }
    };
  });

  auto *from_grid = app.add_subcommand("from-grid", "ASM of a simple flow grid");
  from_grid->add_option("file", file)->required();
  from_grid->callback([&] {
    action = [&] {
      const auto g = parse_grid(io.slurp(file));
      try {
        io.out << format_matrix(grid_to_asm(g));
      } catch (const InvalidFlowGrid &e) {
        io.err << "not a simple flow grid: " << e.what() << "\n";
        throw Rejected{};
      }
    };
  });

  auto *regions = app.add_subcommand("regions", "Count doubly directed regions of a grid");
  regions->add_option("file", file)->required();
  regions->callback([&] {
    action = [&] { io.out << doubly_directed_regions(parse_grid(io.slurp(file))) << "\n"; };
  });

  auto *facets = app.add_subcommand("facets", "Facets of ASM_n");
  facets->add_option("n", order)->required()->check(CLI::Range(2, 7));
  add_cap(facets);
  facets->add_option("--format", facet_format, "Per-facet detail after each summary line")
      ->check(CLI::IsMember({"summary", "matrix", "grid"}))
      ->capture_default_str();
  facets->callback([&] {
    action = [&] {
      const AsmPolytope p(order, cap);
      for (const auto &f : p.enumerate_facets()) {
        io.out << facet_line(f.descriptor) << " " << f.face.dimension << " "
               << f.face.vertex_ids.size() << "\n";
        if (facet_format == "grid")
          io.out << format_grid(f.face.grid);
        else if (facet_format == "matrix")
          for (const auto &a : p.vertices_of(f.face))
            io.out << format_matrix(a);
      }
    };
  });

  auto *facets_of = app.add_subcommand("facets-of", "Facets containing an ASM");
  facets_of->add_option("file", file)->required();
  facets_of->callback([&] {
    action = [&] {
      const auto a = read_asm(io, file);
      for (const auto &d : facets_containing(a))
        io.out << facet_line(d) << "\n";
    };
  });

  auto *face = app.add_subcommand("face", "Smallest face containing the given ASMs");
  face->add_option("files", files, "Files holding one or more ASMs")->required();
  add_cap(face);
  add_format(face);
  face->callback([&] {
    action = [&] {
      const auto asms = read_asms(io, files);
      const AsmPolytope p(asms.front().order(), cap);
      print_face(io, p, p.face_closure(asms), format);
    };
  });

  auto *is_edge = app.add_subcommand("is-edge", "Do two ASMs span an edge of ASM_n");
  is_edge->add_option("first", file)->required();
  is_edge->add_option("second", file2)->required();
  add_cap(is_edge);
  is_edge->callback([&] {
    action = [&] {
      const auto a = read_asm(io, file);
      const auto b = read_asm(io, file2);
      if (a.order() != b.order())
        throw std::invalid_argument("ASMs have different orders");
      const AsmPolytope p(a.order(), cap);
      predicate(io, p.is_edge(a, b));
    };
  });

  auto *lattice = app.add_subcommand("lattice", "Full face lattice of ASM_n");
  lattice->add_option("n", order)->required()->check(CLI::PositiveNumber);
  add_cap(lattice);
  lattice->add_option("--lattice-cap", lattice_cap, "Largest order for lattice enumeration")
      ->capture_default_str();
  lattice->callback([&] {
    action = [&] {
      if (order > lattice_cap)
        throw CapExceeded("order " + std::to_string(order) + " exceeds the lattice cap " +
                          std::to_string(lattice_cap));
      const AsmPolytope p(order, cap);
      io.out << format_lattice(p.enumerate_faces(lattice_cap));
    };
  });

  auto *proj = app.add_subcommand("project", "Project a matrix with a weight vector (zX)");
  proj->add_option("weights", file, "Vector file with z")->required();
  proj->add_option("matrix", file2, "Matrix file with X")->required();
  proj->callback([&] {
    action = [&] {
      const WeightVector z(parse_vector(io.slurp(file)));
      io.out << format_vector(project(z, parse_matrix(io.slurp(file2))));
    };
  });

  auto *major = app.add_subcommand("majorizes", "Is u majorized by v");
  major->add_option("u", file, "Vector file")->required();
  major->add_option("v", file2, "Vector file")->required();
  major->callback([&] {
    action = [&] { predicate(io, majorizes(parse_vector(io.slurp(file)), parse_vector(io.slurp(file2)))); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    io.err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    action();
  } catch (const Rejected &r) {
    return r.status;
  } catch (const InvalidAsm &e) {
    io.err << "not an ASM: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception &e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

} // namespace asmpoly::cli
