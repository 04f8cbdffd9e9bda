/** Entry point: mount the app against the service named by ?api=. */

import { ApiClient } from "./api.js";
import { App } from "./app.js";

const params = new URLSearchParams(window.location.search);
const base = params.get("api") ?? "http://127.0.0.1:7878";

const host = document.getElementById("app");
if (host) {
  void new App(host, new ApiClient(base)).start();
}
