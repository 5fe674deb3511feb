import { GraphExplorer } from "./app.js";

document.addEventListener("DOMContentLoaded", () => {
  const root = document.querySelector<HTMLElement>("#app");
  if (root) new GraphExplorer(root);
});
