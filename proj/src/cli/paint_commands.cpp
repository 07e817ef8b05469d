#include "atkp/paint.hpp"
#include "cli/cli.hpp"

namespace atkp::cli {

namespace {

json transcript_json(const GameTranscript& t) {
  json rounds = json::array();
  for (auto& r : t.rounds) rounds.push_back({{"listed", r.listed}, {"painted", r.painted}});
  return {{"painter_won", t.painter_won}, {"rounds", rounds}};
}

}  // namespace

void add_paint_commands(CLI::App& app, Action& action) {
  auto* paint = app.add_subcommand("paint", "online list colouring (paintability)");
  paint->require_subcommand(1);

  auto* solve = paint->add_subcommand("solve", "decide f-paintability by exhaustive game search");
  auto solve_path = std::make_shared<std::string>();
  auto solve_f = std::make_shared<std::string>("d1");
  solve->add_option("graph", *solve_path)->required();
  solve->add_option("--f", *solve_f, "list sizes: d1, deg, const:<k>, lowset:<ids>, file:<path>");
  solve->callback([&action, solve_path, solve_f] {
    action = [solve_path, solve_f](const Options& opt) {
      RunReport rep;
      rep.command = "paint solve";
      auto g = parse_any_graph(rep.read_input(*solve_path));
      auto f = parse_f_spec(*solve_f, g, &rep);
      GameOptions go;
      go.cap_vertices = cap_or(opt.cap_vertices, go.cap_vertices);
      auto r = is_f_paintable(g, f, go);
      Item it;
      it.name = *solve_path;
      it.pass = r.paintable;
      it.summary = std::string(r.paintable ? "f-paintable" : "not f-paintable") + " (" + std::to_string(r.states) +
                   " states)";
      it.payload = {{"paintable", r.paintable}, {"f", f.values()}, {"states", r.states},
                    {"transcript", transcript_json(r.witness)}};
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* play = paint->add_subcommand("play", "play the kernel strategy of a KP certificate against Lister");
  auto play_cert = std::make_shared<std::string>();
  auto play_adv = std::make_shared<std::string>("exhaustive");
  auto play_games = std::make_shared<long long>(1000);
  play->add_option("--cert", *play_cert, "certificate JSON, or a 'kp search' report")->required();
  play->add_option("--adversary", *play_adv, "exhaustive, random:<seed>, or random (uses --seed)");
  play->add_option("--games", *play_games, "games for the random adversary")->check(CLI::PositiveNumber);
  play->callback([&action, play_cert, play_adv, play_games] {
    action = [play_cert, play_adv, play_games](const Options& opt) {
      RunReport rep;
      rep.command = "paint play";
      auto cert = kp_cert_from_json(parse_json_text(rep.read_input(*play_cert)));
      std::string adv = *play_adv;
      if (adv == "random") {
        if (!opt.seed) throw InputError("random adversary needs a seed: random:<seed> or --seed");
        adv = "random:" + std::to_string(*opt.seed);
      }
      int cap = cap_or(opt.cap_vertices, 12);
      if (cert.graph.n() > cap)
        throw CapExceeded(std::to_string(cert.graph.n()) + " vertices exceeds vertex cap " + std::to_string(cap));
      auto v = verify_kp_certificate(cert);
      if (!v.ok) throw InputError("certificate does not verify: " + v.reason);
      auto r = kernel_painter_play(cert.graph, cert.f, cert, adv, *play_games);
      Item it;
      it.name = *play_cert;
      it.pass = r.painter_always_won;
      it.summary = std::string(r.painter_always_won ? "Painter won all " : "Painter lost one of ") +
                   std::to_string(r.games) + " game(s) against " + adv;
      it.payload = {{"adversary", adv},
                    {"painter_always_won", r.painter_always_won},
                    {"games", r.games},
                    {"states", r.states},
                    {"transcript", transcript_json(r.example)}};
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* choose = app.add_subcommand("choose", "list colouring (choosability)");
  choose->require_subcommand(1);
  auto* csolve = choose->add_subcommand("solve", "decide f-choosability exhaustively");
  auto c_path = std::make_shared<std::string>();
  auto c_f = std::make_shared<std::string>("d1");
  csolve->add_option("graph", *c_path)->required();
  csolve->add_option("--f", *c_f, "list sizes: d1, deg, const:<k>, lowset:<ids>, file:<path>");
  csolve->callback([&action, c_path, c_f] {
    action = [c_path, c_f](const Options& opt) {
      RunReport rep;
      rep.command = "choose solve";
      auto g = parse_any_graph(rep.read_input(*c_path));
      auto f = parse_f_spec(*c_f, g, &rep);
      ChooseOptions co;
      co.cap_vertices = cap_or(opt.cap_vertices, co.cap_vertices);
      auto r = is_f_choosable(g, f, co);
      Item it;
      it.name = *c_path;
      it.pass = r.choosable;
      it.summary = std::string(r.choosable ? "f-choosable" : "not f-choosable") + " (" + std::to_string(r.states) +
                   " states)";
      it.payload = {{"choosable", r.choosable}, {"f", f.values()}, {"states", r.states}};
      if (!r.choosable) it.payload["failing_lists"] = r.failing_lists;
      rep.results.push_back(it);
      return rep;
    };
  });
}

}  // namespace atkp::cli
