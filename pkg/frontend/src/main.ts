import { createController } from "./controller";
import { health } from "./api";

const app = document.getElementById("app");
if (app) {
  const ctl = createController(app);
  void health().then((ok) => {
    if (!ok) {
      const banner = ctl.root.querySelector<HTMLElement>("#banner");
      if (banner) {
        banner.hidden = false;
        banner.textContent = "service unreachable; is speedreader-serve running?";
      }
    }
  });
}
