// Browser entry point; kept separate from App so tests can construct the
// controller without side effects.

import { Client } from "./api.js";
import { App } from "./main.js";

const root = document.getElementById("app");
if (root) {
  const app = new App(root, new Client(""));
  app.mount();
  void app.configure(4, [3], "1000", "0011"); // matches the form defaults
}
