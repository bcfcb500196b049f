// Copyright 2026 The Tabmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "table/language.h"

namespace tabmatch {

const std::map<std::string, std::string>& BundledLanguageCorpora() {
  static const std::map<std::string, std::string> corpora = {
      {"en",
       "The city is the largest in the country and it is known for its old "
       "harbour, the river that runs through the centre, and the many people "
       "who live and work there. In the morning the streets are quiet, but by "
       "the afternoon the markets are full of traders selling fruit, fish and "
       "bread. A small grey cat sleeps on the wall while the children "
       "watch from the window. This is where the government meets, where the "
       "university was founded, and where most of the national museums can be "
       "found. Which of these would you like to visit first? We should take "
       "the train because the road through the mountains is closed during the "
       "winter months. He was born in a small village, studied history and "
       "later became a writer whose books were translated into many "
       "languages. She has worked with the team for years and they thought "
       "that the weather would be better than it was. Through the year there "
       "are concerts, football matches and festivals with thousands of "
       "visitors from other countries."},
      {"de",
       "Die Stadt ist die größte des Landes und bekannt für ihren alten Hafen, "
       "den Fluss, der durch die Mitte fließt, und die vielen Menschen, die "
       "dort leben und arbeiten. Am Morgen sind die Straßen ruhig, aber am "
       "Nachmittag sind die Märkte voller Händler, die Obst, Fisch und Brot "
       "verkaufen. Eine kleine graue Katze schläft auf der Mauer, "
       "während die Kinder aus dem Fenster schauen. Hier tagt die Regierung, "
       "hier wurde die Universität gegründet, und hier findet man die meisten "
       "Museen des Landes. Welche davon möchtest du zuerst besuchen? Wir "
       "sollten den Zug nehmen, weil die Straße durch die Berge im Winter "
       "gesperrt ist. Er wurde in einem kleinen Dorf geboren, studierte "
       "Geschichte und wurde später ein Schriftsteller, dessen Bücher in "
       "viele Sprachen übersetzt wurden. Sie arbeitet seit Jahren mit der "
       "Gruppe zusammen und sie dachten, dass das Wetter besser sein würde. "
       "Das ganze Jahr über gibt es Konzerte, Fußballspiele und Feste mit "
       "tausenden Besuchern aus anderen Ländern."},
      {"fr",
       "La ville est la plus grande du pays et elle est connue pour son vieux "
       "port, le fleuve qui traverse le centre et les nombreuses personnes qui "
       "y vivent et y travaillent. Le matin les rues sont calmes, mais "
       "l'après-midi les marchés sont pleins de commerçants qui vendent des "
       "fruits, du poisson et du pain. Un petit chat gris dort sur "
       "le mur pendant que les enfants regardent par la fenêtre. "
       "C'est ici que le gouvernement se réunit, que l'université a été fondée "
       "et que l'on trouve la plupart des musées nationaux. Lequel voulez-vous "
       "visiter en premier? Nous devrions prendre le train parce que la route "
       "à travers les montagnes est fermée pendant les mois d'hiver. Il est "
       "né dans un petit village, a étudié l'histoire et est devenu plus tard "
       "un écrivain dont les livres ont été traduits dans de nombreuses "
       "langues. Elle travaille avec l'équipe depuis des années et ils "
       "pensaient que le temps serait meilleur. Toute l'année il y a des "
       "concerts, des matchs de football et des fêtes avec des milliers de "
       "visiteurs venus d'autres pays."},
      {"es",
       "La ciudad es la más grande del país y es conocida por su viejo "
       "puerto, el río que atraviesa el centro y las muchas personas que "
       "viven y trabajan allí. Por la mañana las calles están tranquilas, "
       "pero por la tarde los mercados están llenos de comerciantes que "
       "venden fruta, pescado y pan. Un pequeño gato gris duerme sobre el "
       "muro mientras los niños miran por la ventana. Aquí se reúne "
       "el gobierno, aquí se fundó la universidad y aquí se encuentran la "
       "mayoría de los museos nacionales. ¿Cuál de ellos quieres visitar "
       "primero? Deberíamos tomar el tren porque la carretera que cruza las "
       "montañas está cerrada durante los meses de invierno. Nació en un "
       "pequeño pueblo, estudió historia y más tarde se convirtió en un "
       "escritor cuyos libros fueron traducidos a muchos idiomas. Ella "
       "trabaja con el equipo desde hace años y pensaban que el tiempo sería "
       "mejor. Durante todo el año hay conciertos, partidos de fútbol y "
       "fiestas con miles de visitantes de otros países."},
      {"it",
       "La città è la più grande del paese ed è conosciuta per il suo vecchio "
       "porto, il fiume che attraversa il centro e le molte persone che ci "
       "vivono e lavorano. Al mattino le strade sono tranquille, ma nel "
       "pomeriggio i mercati sono pieni di commercianti che vendono frutta, "
       "pesce e pane. Un piccolo gatto grigio dorme sul muro "
       "mentre i bambini guardano dalla finestra. Qui si riunisce il governo, "
       "qui è stata fondata l'università e qui si trovano la maggior parte "
       "dei musei nazionali. Quale di questi vuoi visitare per primo? "
       "Dovremmo prendere il treno perché la strada attraverso le montagne è "
       "chiusa durante i mesi invernali. È nato in un piccolo villaggio, ha "
       "studiato storia e più tardi è diventato uno scrittore i cui libri "
       "sono stati tradotti in molte lingue. Lei lavora con la squadra da "
       "anni e pensavano che il tempo sarebbe stato migliore. Durante tutto "
       "l'anno ci sono concerti, partite di calcio e feste con migliaia di "
       "visitatori provenienti da altri paesi."},
  };
  return corpora;
}

}  // namespace tabmatch
