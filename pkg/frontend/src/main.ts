import { Viewer } from "./app.js";

const root = document.getElementById("app");
if (root) new Viewer(root);
